#pragma once

// Clique-disjoint edge sets, the invariant eta(G), and the regularity bound
// formulas derived from it.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gbei/graph.hpp"

namespace gbei {

using EdgeSet = std::vector<std::pair<int, int>>;

// Two edges conflict iff the union of their endpoints induces a complete
// subgraph of g (then both lie in a common clique).
inline bool edges_conflict(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
  std::uint64_t u = (1ull << (e1.first - 1)) | (1ull << (e1.second - 1)) |
                    (1ull << (e2.first - 1)) | (1ull << (e2.second - 1));
  return detail::induces_complete(g, u);
}

inline bool is_clique_disjoint(const Graph& g, const EdgeSet& edges) {
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (edges_conflict(g, edges[a], edges[b])) return false;
  return true;
}

// Vertex i of the result corresponds to g.edges()[i-1]; adjacency = conflict.
inline Graph conflict_graph(const Graph& g) {
  const auto& edges = g.edges();
  int e = static_cast<int>(edges.size());
  std::vector<std::pair<int, int>> conf;
  for (int a = 0; a < e; ++a)
    for (int b = a + 1; b < e; ++b)
      if (edges_conflict(g, edges[a], edges[b])) conf.emplace_back(a + 1, b + 1);
  return Graph(e, std::move(conf));
}

enum class EtaMode { kExact, kBruteForce };

struct EtaResult {
  int value = 0;
  EdgeSet witness;  // a maximum clique-disjoint edge set
};

namespace detail {

// Max independent set in the conflict graph, branch and bound with a greedy
// clique-cover upper bound. Branch vertex: maximum degree in the remaining
// subgraph, lowest index on ties.
struct MisSolver {
  const Graph& g;
  int best = 0;
  std::uint64_t best_set = 0;

  explicit MisSolver(const Graph& graph) : g(graph) {}

  // Greedy clique cover of the candidate set; its size bounds any
  // independent set inside `cand` from above.
  int clique_cover_bound(std::uint64_t cand) const {
    int cliques = 0;
    std::uint64_t left = cand;
    while (left) {
      ++cliques;
      std::uint64_t cls = 0;
      std::uint64_t avail = left;
      while (avail) {
        int v = __builtin_ctzll(avail) + 1;
        cls |= 1ull << (v - 1);
        avail &= g.neighbor_mask(v);
      }
      left &= ~cls;
    }
    return cliques;
  }

  void search(std::uint64_t cand, std::uint64_t chosen, int size) {
    if (size > best) {
      best = size;
      best_set = chosen;
    }
    if (!cand) return;
    if (size + clique_cover_bound(cand) <= best) return;
    int pick = -1, deg = -1;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      int v = __builtin_ctzll(c) + 1;
      int d = __builtin_popcountll(g.neighbor_mask(v) & cand);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    std::uint64_t bit = 1ull << (pick - 1);
    search((cand & ~bit) & ~g.neighbor_mask(pick), chosen | bit, size + 1);
    search(cand & ~bit, chosen, size);
  }
};

}  // namespace detail

inline EtaResult eta(const Graph& g, EtaMode mode = EtaMode::kExact) {
  const auto& edges = g.edges();
  int e = static_cast<int>(edges.size());
  EtaResult result;
  if (e == 0) return result;

  Graph conf = conflict_graph(g);
  if (mode == EtaMode::kBruteForce) {
    if (e > 20) throw std::length_error("brute-force eta limited to 20 edges");
    std::uint64_t best_set = 0;
    int best = 0;
    for (std::uint64_t s = 0; s < (1ull << e); ++s) {
      int size = __builtin_popcountll(s);
      if (size <= best) continue;
      bool indep = true;
      for (std::uint64_t a = s; a && indep; a &= a - 1) {
        int i = __builtin_ctzll(a) + 1;
        if (conf.neighbor_mask(i) & s) indep = false;
      }
      if (indep) {
        best = size;
        best_set = s;
      }
    }
    result.value = best;
    for (int i : detail::mask_to_set(best_set)) result.witness.push_back(edges[i - 1]);
    return result;
  }

  detail::MisSolver solver(conf);
  solver.search(conf.full_mask(), 0, 0);
  result.value = solver.best;
  for (int i : detail::mask_to_set(solver.best_set)) result.witness.push_back(edges[i - 1]);
  return result;
}

struct InvariantReport {
  int m = 2;
  int n = 0;
  int e = 0;
  int c = 0;         // number of maximal cliques
  int eta = 0;       // max clique-disjoint edge set size
  int iv = 0;        // internal vertex count
  long phi = 0;      // min{(m-1) eta, n-1}, 0 for the empty graph
  long sk_bound = 0; // min{C(m,2) c, e}
  long clique_bound = 0;  // min{(m-1) c, n-1}
  EdgeSet witness_eta;
};

inline long phi_value(int m, int eta_val, int n) {
  if (n == 0) return 0;
  return std::min<long>(static_cast<long>(m - 1) * eta_val, n - 1);
}

// Phi(K_m, G) = min{(m-1) eta(G), n-1}.
inline long phi_map(int m, const Graph& g) { return phi_value(m, eta(g).value, g.n()); }

inline InvariantReport bounds(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  InvariantReport r;
  r.m = m;
  r.n = g.n();
  r.e = g.edge_count();
  r.c = clique_number_c(g);
  auto et = eta(g);
  r.eta = et.value;
  r.witness_eta = std::move(et.witness);
  r.iv = internal_vertex_count(g);
  r.phi = phi_value(m, r.eta, r.n);
  long binom_m2 = static_cast<long>(m) * (m - 1) / 2;
  r.sk_bound = std::min<long>(binom_m2 * r.c, r.e);
  r.clique_bound = r.n == 0 ? 0 : std::min<long>(static_cast<long>(m - 1) * r.c, r.n - 1);
  return r;
}

}  // namespace gbei
