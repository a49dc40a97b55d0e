#include <catch2/catch_amalgamated.hpp>

#include "gbei/enumerate.hpp"
#include "gbei/invariants.hpp"

using namespace gbei;

TEST_CASE("conflict graph") {
  CHECK(conflict_graph(path_graph(4)).edge_count() == 0);  // triangle-free
  Graph k3c = conflict_graph(complete_graph(3));
  CHECK(k3c.n() == 3);
  CHECK(k3c.edge_count() == 3);
  Graph k4c = conflict_graph(complete_graph(4));
  CHECK(k4c.n() == 6);
  CHECK(k4c.edge_count() == 15);  // complete conflict graph on 6 edge-vertices
}

TEST_CASE("eta on known graphs") {
  for (int n : {2, 3, 4, 5}) CHECK(eta(complete_graph(n)).value == 1);
  for (int n : {2, 3, 4, 5, 6}) CHECK(eta(path_graph(n)).value == n - 1);
  CHECK(eta(figure1_graph()).value == 3);
  CHECK(eta(figure2_graph()).value == 2);
  CHECK(eta(Graph(4)).value == 0);
}

TEST_CASE("eta witness is clique disjoint") {
  for (const Graph& g : {figure1_graph(), figure2_graph(), path_graph(5), complete_graph(4)}) {
    auto r = eta(g);
    CHECK(static_cast<int>(r.witness.size()) == r.value);
    CHECK(is_clique_disjoint(g, r.witness));
  }
}

TEST_CASE("exact eta equals brute force on all graphs with n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, false))
      CHECK(eta(g, EtaMode::kExact).value == eta(g, EtaMode::kBruteForce).value);
}

TEST_CASE("brute force capacity limit") {
  CHECK_THROWS_AS(eta(complete_graph(7), EtaMode::kBruteForce), std::length_error);
}

TEST_CASE("bounds reports") {
  auto fig2 = bounds(figure2_graph(), 3);
  CHECK(fig2.eta == 2);
  CHECK(fig2.phi == 4);  // min{2*2, 5}
  auto fig1 = bounds(figure1_graph(), 3);
  CHECK(fig1.phi == 6);  // min{2*3, 10}
  auto k2 = bounds(complete_graph(2), 2);
  CHECK(k2.eta == 1);
  CHECK(k2.phi == 1);
  CHECK(bounds(Graph(0), 3).phi == 0);
}

TEST_CASE("eta monotonicity under the recursion moves") {
  // eta(G - v) <= eta(G) and eta(G_v) <= eta(G) for internal v; n <= 5 exhaustive
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      int base = eta(g).value;
      CHECK(base <= clique_number_c(g));
      for (int v : free_vertices(g).internal) {
        CHECK(eta(delete_vertex(g, v)).value <= base);
        CHECK(eta(neighbor_completion(g, v)).value <= base);
      }
    }
  }
}

TEST_CASE("phi never exceeds the pairwise-minor bound on connected graphs") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, true))
      for (int m = 2; m <= 6; ++m) {
        auto r = bounds(g, m);
        CHECK(r.phi <= r.sk_bound);
      }
}
