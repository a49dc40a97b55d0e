#include <catch2/catch_amalgamated.hpp>

#include "gbei/enumerate.hpp"
#include "gbei/rcompat.hpp"

using namespace gbei;

namespace {

long phi_of(int m, const Graph& g) { return phi_map(m, g); }

long collect_max(const BoundCertificate& node, int m) {
  if (node.leaf) {
    long v = 0;
    for (int sz : node.leaf_component_sizes) v += std::min(m - 1, sz - 1);
    return v;
  }
  return std::max({collect_max(*node.child_gv, m), collect_max(*node.child_minus, m),
                   collect_max(*node.child_gv_minus, m) + 1});
}

// every leaf must really be a disjoint union of completes, every branch vertex
// internal in its node's graph
bool certificate_sound(const BoundCertificate& node) {
  if (node.leaf) return classify(node.graph).is_disjoint_union_of_completes;
  if (is_free_vertex(node.graph, node.branch_vertex)) return false;
  return certificate_sound(*node.child_gv) && certificate_sound(*node.child_minus) &&
         certificate_sound(*node.child_gv_minus);
}

}  // namespace

TEST_CASE("phi is r-compatible on all graphs with up to five vertices") {
  for (int m : {2, 3, 5}) {
    std::vector<Graph> family;
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_graphs(n, false)) family.push_back(g);
    auto rep = check_r_compatible(phi_of, m, family);
    INFO("m=" << m << (rep.failures.empty() ? "" : " first: " + rep.failures[0].graph6 + " cond " +
                                                       rep.failures[0].condition + " " +
                                                       rep.failures[0].details));
    CHECK(rep.ok());
    CHECK(rep.graphs_checked == static_cast<long>(family.size()));
  }
}

TEST_CASE("the zero map violates condition 2") {
  auto zero = [](int, const Graph&) -> long { return 0; };
  auto rep = check_r_compatible(zero, 2, {complete_graph(2)});
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].condition == "2");
}

TEST_CASE("n-1 is r-compatible on small graphs") {
  auto nm1 = [](int, const Graph& g) -> long { return std::max(g.n() - 1, 0); };
  std::vector<Graph> family;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n, false)) family.push_back(g);
  CHECK(check_r_compatible(nm1, 3, family).ok());
}

TEST_CASE("certificate for a disjoint union of completes is a leaf") {
  auto cert = bound_certificate(disjoint_union(complete_graph(2), complete_graph(3)), 3, phi_of);
  REQUIRE(cert->leaf);
  CHECK(cert->leaf_component_sizes == std::vector<int>{2, 3});
  CHECK(cert->value == 3);
}

TEST_CASE("certificate for a path replays the recursion") {
  auto cert = bound_certificate(path_graph(3), 2, phi_of);
  REQUIRE_FALSE(cert->leaf);
  CHECK(cert->branch_vertex == 2);
  CHECK(cert->value == 2);
  CHECK(cert->value <= phi_of(2, path_graph(3)));
  CHECK(certificate_sound(*cert));
  CHECK(collect_max(*cert, 2) == cert->value);
}

TEST_CASE("certificates stay within phi on small connected graphs") {
  for (int m : {2, 3}) {
    for (int n = 2; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n, true)) {
        auto cert = bound_certificate(g, m, phi_of);
        CHECK(cert->value <= phi_of(m, g));
        CHECK(certificate_sound(*cert));
      }
    }
  }
}

TEST_CASE("figure certificates") {
  auto c2 = bound_certificate(figure2_graph(), 3, phi_of);
  CHECK(c2->value <= 4);
  CHECK(c2->value == 3);  // max(reg K_6, reg K_2+K_3, reg K_5 + 1)
  auto c1 = bound_certificate(figure1_graph(), 3, phi_of);
  CHECK(c1->value <= 6);
  CHECK(certificate_sound(*c1));
}
