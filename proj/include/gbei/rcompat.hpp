#pragma once

// Machine verification of the r-compatible map conditions and explicit
// bound certificates replaying the regularity recursion over
// (G_v, G - v, G_v - v) down to disjoint-complete leaves.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbei/graph.hpp"
#include "gbei/invariants.hpp"

namespace gbei {

using PhiMap = std::function<long(int m, const Graph&)>;

struct CompatibilityFailure {
  std::string graph6;
  std::string condition;  // one of "1", "2", "3a", "3b", "3c", "3-no-witness"
  std::string details;
};

struct CompatibilityReport {
  int m = 0;
  long graphs_checked = 0;
  std::vector<CompatibilityFailure> failures;
  // witness vertex per graph that needed condition (3), parallel to checks
  bool ok() const { return failures.empty(); }
};

// Checks the recursion-compatibility conditions for phi on each graph:
//  (1) phi(m, G-hat) <= phi(m, G);
//  (2) when G (isolated vertices stripped) is a disjoint union of complete
//      graphs on >= 2 vertices each, phi(m, G-hat) >= sum min{m-1, n_i-1};
//  (3) otherwise some internal v satisfies the three recursion inequalities.
inline CompatibilityReport check_r_compatible(const PhiMap& phi, int m,
                                              const std::vector<Graph>& family) {
  CompatibilityReport report;
  report.m = m;
  for (const Graph& g : family) {
    ++report.graphs_checked;
    std::string g6 = to_graph6(g);
    Graph ghat = strip_isolated(g).graph;
    long phi_g = phi(m, g);
    long phi_ghat = phi(m, ghat);
    if (phi_ghat > phi_g) {
      report.failures.push_back({g6, "1",
                                 "phi(Ghat)=" + std::to_string(phi_ghat) +
                                     " > phi(G)=" + std::to_string(phi_g)});
    }
    auto cls = classify(ghat);
    if (cls.is_disjoint_union_of_completes) {
      long k = 0;
      for (int sz : cls.component_complete_sizes) k += std::min(m - 1, sz - 1);
      if (phi_ghat < k) {
        report.failures.push_back({g6, "2",
                                   "phi(Ghat)=" + std::to_string(phi_ghat) +
                                       " < k=" + std::to_string(k)});
      }
      continue;
    }
    bool witness = false;
    std::string last;
    for (int v : free_vertices(g).internal) {
      long a = phi(m, delete_vertex(g, v));
      Graph gv = neighbor_completion(g, v);
      long b = phi(m, gv);
      long c = phi(m, delete_vertex(gv, v));
      if (a <= phi_g && b <= phi_g && c + 1 <= phi_g) {
        witness = true;
        break;
      }
      last = "v=" + std::to_string(v) + ": phi(G-v)=" + std::to_string(a) +
             " phi(G_v)=" + std::to_string(b) + " phi(G_v-v)+1=" + std::to_string(c + 1) +
             " vs phi(G)=" + std::to_string(phi_g);
    }
    if (!witness) report.failures.push_back({g6, "3-no-witness", last});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Bound certificates

struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundCertificate {
  Graph graph;  // the node's graph with isolated vertices already stripped
  bool leaf = false;
  std::vector<int> leaf_component_sizes;  // complete component orders, leaves only
  int branch_vertex = 0;                  // internal vertex used at a branch
  long value = 0;
  std::unique_ptr<BoundCertificate> child_gv, child_minus, child_gv_minus;
};

namespace detail {

inline std::unique_ptr<BoundCertificate> certify(const Graph& g, int m, const PhiMap& phi,
                                                 int depth) {
  if (depth > 4 * kMaxVertices) throw CertificateError("certificate recursion too deep");
  auto node = std::make_unique<BoundCertificate>();
  Graph ghat = strip_isolated(g).graph;
  node->graph = ghat;
  auto cls = classify(ghat);
  if (cls.is_disjoint_union_of_completes) {
    node->leaf = true;
    node->leaf_component_sizes = cls.component_complete_sizes;
    for (int sz : cls.component_complete_sizes) node->value += std::min(m - 1, sz - 1);
    return node;
  }

  long phi_g = phi(m, ghat);
  int iv_g = internal_vertex_count(ghat);
  int chosen = 0, chosen_iv = kMaxVertices + 1;
  for (int v : free_vertices(ghat).internal) {
    Graph gv = neighbor_completion(ghat, v);
    long a = phi(m, delete_vertex(ghat, v));
    long b = phi(m, gv);
    long c = phi(m, delete_vertex(gv, v));
    if (!(a <= phi_g && b <= phi_g && c + 1 <= phi_g)) continue;
    int ivv = internal_vertex_count(gv);
    if (ivv < chosen_iv || (ivv == chosen_iv && v < chosen)) {
      chosen = v;
      chosen_iv = ivv;
    }
  }
  if (chosen == 0)
    throw CertificateError("no condition-(3) witness vertex in " + to_graph6(ghat));
  if (chosen_iv >= iv_g)
    throw CertificateError("iv(G_v) did not decrease at " + to_graph6(ghat) +
                           ", v=" + std::to_string(chosen));

  Graph gv = neighbor_completion(ghat, chosen);
  node->branch_vertex = chosen;
  node->child_gv = certify(gv, m, phi, depth + 1);
  node->child_minus = certify(delete_vertex(ghat, chosen), m, phi, depth + 1);
  node->child_gv_minus = certify(delete_vertex(gv, chosen), m, phi, depth + 1);
  node->value = std::max({node->child_gv->value, node->child_minus->value,
                          node->child_gv_minus->value + 1});
  return node;
}

}  // namespace detail

// Recursion tree witnessing reg(S/J_{K_m,G}) <= value <= phi(m, G).
inline std::unique_ptr<BoundCertificate> bound_certificate(const Graph& g, int m,
                                                           const PhiMap& phi) {
  return detail::certify(g, m, phi, 0);
}

}  // namespace gbei
