#pragma once

// Exhaustive small-graph enumeration up to isomorphism (brute-force
// canonical labeling, n <= 8) and a seeded random generator for the
// clique-tree class B_m.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gbei/graph.hpp"
#include "gbei/groebner.hpp"  // CapacityError

namespace gbei {

namespace detail {

// Upper-triangle bit index of edge {u, v}, 1 <= u < v <= n, colex order.
inline int edge_bit(int u, int v) { return (v - 1) * (v - 2) / 2 + (u - 1); }

inline std::uint64_t graph_bits(const Graph& g) {
  std::uint64_t bits = 0;
  for (auto [u, v] : g.edges()) bits |= 1ull << edge_bit(u, v);
  return bits;
}

inline Graph graph_from_bits(int n, std::uint64_t bits) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u)
      if (bits & (1ull << edge_bit(u, v))) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Per-permutation bit relabeling tables for all n! permutations of [n].
inline std::vector<std::vector<int>> permutation_bit_maps(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  int nbits = n * (n - 1) / 2;
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> map(nbits);
    for (int v = 2; v <= n; ++v)
      for (int u = 1; u < v; ++u) {
        int a = perm[u - 1], b = perm[v - 1];
        if (a > b) std::swap(a, b);
        map[edge_bit(u, v)] = edge_bit(a, b);
      }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

inline std::uint64_t apply_bit_map(std::uint64_t bits, const std::vector<int>& map) {
  std::uint64_t out = 0;
  while (bits) {
    int b = __builtin_ctzll(bits);
    bits &= bits - 1;
    out |= 1ull << map[b];
  }
  return out;
}

}  // namespace detail

// Lexicographically smallest adjacency bit-string over all relabelings.
inline std::uint64_t canonical_bits(const Graph& g) {
  auto maps = detail::permutation_bit_maps(g.n());
  std::uint64_t bits = detail::graph_bits(g);
  std::uint64_t best = bits;
  for (const auto& map : maps) best = std::min(best, detail::apply_bit_map(bits, map));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_bits(a) == canonical_bits(b);
}

// One representative per isomorphism class on exactly n vertices.
inline std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > 8) throw CapacityError("exhaustive enumeration limited to n <= 8");
  if (n == 0) return {Graph(0)};
  auto maps = detail::permutation_bit_maps(n);
  int nbits = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (1ull << nbits); ++bits) {
    bool canonical = true;
    for (const auto& map : maps) {
      if (detail::apply_bit_map(bits, map) < bits) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g = detail::graph_from_bits(n, bits);
    if (connected_only && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

// All graphs with 1..n_max vertices (representatives per class).
inline std::vector<Graph> enumerate_graphs_up_to(int n_max, bool connected_only) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto batch = enumerate_graphs(n, connected_only);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

// Random clique tree in B_m: every vertex in at most two maximal cliques and
// each clique of size m + r .. m + r + 2, r = its count of cut vertices.
inline Graph random_bm_graph(int m, int max_cliques, std::mt19937& rng) {
  int k = std::uniform_int_distribution<int>(1, max_cliques)(rng);
  // Random tree on k clique-nodes: parent[i] < i.
  std::vector<int> parent(k, -1);
  std::vector<int> tree_degree(k, 0);
  for (int i = 1; i < k; ++i) {
    parent[i] = std::uniform_int_distribution<int>(0, i - 1)(rng);
    ++tree_degree[i];
    ++tree_degree[parent[i]];
  }
  std::vector<int> size(k);
  for (int i = 0; i < k; ++i)
    size[i] = m + tree_degree[i] + std::uniform_int_distribution<int>(0, 2)(rng);

  std::vector<std::vector<int>> clique_vertices(k);
  std::vector<std::vector<int>> shared(k);  // vertices of clique i already used as cut vertices
  int next_vertex = 1;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      // Attach via a fresh non-cut vertex of the parent clique.
      std::vector<int> candidates;
      for (int v : clique_vertices[parent[i]])
        if (std::find(shared[parent[i]].begin(), shared[parent[i]].end(), v) ==
            shared[parent[i]].end())
          candidates.push_back(v);
      int pick = candidates[std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng)];
      shared[parent[i]].push_back(pick);
      shared[i].push_back(pick);
      clique_vertices[i].push_back(pick);
    }
    while (static_cast<int>(clique_vertices[i].size()) < size[i])
      clique_vertices[i].push_back(next_vertex++);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& cv : clique_vertices)
    for (std::size_t a = 0; a < cv.size(); ++a)
      for (std::size_t b = a + 1; b < cv.size(); ++b) edges.emplace_back(cv[a], cv[b]);
  return Graph(next_vertex - 1, std::move(edges));
}

}  // namespace gbei
