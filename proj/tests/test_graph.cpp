#include <catch2/catch_amalgamated.hpp>

#include "gbei/graph.hpp"

using namespace gbei;

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("3\n1 2\n2 3");
  REQUIRE(g.n() == 3);
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(parse_edge_list("2\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n1 3"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n1 x"), ParseError);
}

TEST_CASE("graph6 decoding matches a hand decoding") {
  // "B_" : n = 'B'-63 = 3, body '_' = 63+32 -> bits 100000 for (1,2),(1,3),(2,3)
  Graph g = parse_graph6("B_");
  REQUIRE(g.n() == 3);
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});

  // path 1-2-3 is "BW": bits 010100... wait, encode and decode must roundtrip.
  Graph p3 = path_graph(3);
  CHECK(parse_graph6(to_graph6(p3)) == p3);
  Graph k4 = complete_graph(4);
  CHECK(parse_graph6(to_graph6(k4)) == k4);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B_\x01"), ParseError);
}

TEST_CASE("connected components") {
  CHECK(connected_components(complete_graph(3)) == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(connected_components(Graph(4)).size() == 4);
  Graph g = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(connected_components(g) == std::vector<VertexSet>{{1, 2}, {3, 4, 5}});
}

TEST_CASE("cutsets") {
  auto cs = cutsets(path_graph(3));
  CHECK(cs == std::vector<VertexSet>{{}, {2}});
  CHECK(cutsets(complete_graph(4)) == std::vector<VertexSet>{{}});
  auto fig2 = cutsets(figure2_graph());
  CHECK(std::find(fig2.begin(), fig2.end(), VertexSet{3}) != fig2.end());
}

// brute-force reference for the cutset condition
static bool cutset_brute(const Graph& g, const VertexSet& t) {
  for (int i : t) {
    VertexSet rest;
    for (int j : t)
      if (j != i) rest.push_back(j);
    auto del = delete_vertices(g, rest);
    int new_i = 0;
    for (std::size_t k = 0; k < del.old_label.size(); ++k)
      if (del.old_label[k] == i) new_i = static_cast<int>(k) + 1;
    int before = static_cast<int>(connected_components(del.graph).size());
    int after = static_cast<int>(connected_components(delete_vertex(del.graph, new_i)).size());
    if (after <= before) return false;
  }
  return true;
}

TEST_CASE("cutsets agree with brute force on small graphs") {
  std::vector<Graph> samples = {path_graph(4), figure2_graph(), complete_graph(4),
                                disjoint_union(path_graph(3), complete_graph(2))};
  for (const auto& g : samples) {
    auto cs = cutsets(g);
    long expected = 0;
    for (std::uint64_t mask = 0; mask < (1ull << g.n()); ++mask) {
      auto t = detail::mask_to_set(mask);
      if (cutset_brute(g, t)) {
        ++expected;
        CHECK(std::find(cs.begin(), cs.end(), t) != cs.end());
      }
    }
    CHECK(static_cast<long>(cs.size()) == expected);
  }
}

TEST_CASE("neighbor completion") {
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(neighbor_completion(star, 1) == complete_graph(4));
  CHECK(neighbor_completion(path_graph(3), 2) == complete_graph(3));
  Graph k3 = complete_graph(3);
  CHECK(neighbor_completion(k3, 1) == k3);  // free vertex: unchanged

  // idempotence and freeness on a few graphs
  for (const Graph& g : {figure2_graph(), path_graph(5)}) {
    for (int v = 1; v <= g.n(); ++v) {
      Graph gv = neighbor_completion(g, v);
      for (auto e : g.edges()) CHECK(gv.adjacent(e.first, e.second));
      CHECK(is_free_vertex(gv, v));
      CHECK(neighbor_completion(gv, v) == gv);
    }
  }
}

TEST_CASE("vertex deletion") {
  auto del = delete_vertices(path_graph(3), {2});
  CHECK(del.graph == Graph(2));
  CHECK(del.old_label == std::vector<int>{1, 3});
  CHECK(delete_vertices(figure2_graph(), {}).graph == figure2_graph());
  CHECK(delete_vertices(path_graph(3), {1, 2, 3}).graph.n() == 0);

  // Figure 1 minus its cut vertices: K_3 + K_3 + K_3
  auto h = delete_vertices(figure1_graph(), {4, 8}).graph;
  auto cls = classify(h);
  CHECK(cls.is_disjoint_union_of_completes);
  CHECK(cls.component_complete_sizes == std::vector<int>{3, 3, 3});
}

TEST_CASE("free and internal vertices") {
  auto p = free_vertices(complete_graph(5));
  CHECK(p.internal.empty());
  p = free_vertices(path_graph(3));
  CHECK(p.free == VertexSet{1, 3});
  CHECK(p.internal == VertexSet{2});
  p = free_vertices(figure2_graph());
  CHECK(p.internal == VertexSet{3});
  CHECK(free_vertices(Graph(3)).free.size() == 3);  // isolated vertices are free
}

TEST_CASE("maximal cliques") {
  auto fig1 = maximal_cliques(figure1_graph());
  REQUIRE(fig1.size() == 3);
  CHECK(fig1[0] == VertexSet{1, 2, 3, 4});
  CHECK(fig1[1] == VertexSet{4, 5, 6, 7, 8});
  CHECK(fig1[2] == VertexSet{8, 9, 10, 11});
  CHECK(maximal_cliques(path_graph(5)).size() == 4);
  CHECK(maximal_cliques(complete_graph(4)) == std::vector<VertexSet>{{1, 2, 3, 4}});
}

// every complete induced subgraph is contained in some reported maximal clique
TEST_CASE("maximal cliques cross-check against brute force") {
  for (const Graph& g : {figure2_graph(), path_graph(6), complete_graph(5)}) {
    auto cliques = maximal_cliques(g);
    for (std::uint64_t mask = 1; mask < (1ull << g.n()); ++mask) {
      if (!detail::induces_complete(g, mask)) continue;
      bool contained = false;
      for (const auto& c : cliques)
        if ((detail::set_to_mask(c) & mask) == mask) contained = true;
      CHECK(contained);
    }
    // and each reported clique is complete and maximal
    for (const auto& c : cliques) {
      auto m = detail::set_to_mask(c);
      CHECK(detail::induces_complete(g, m));
      for (int v = 1; v <= g.n(); ++v) {
        if (m & (1ull << (v - 1))) continue;
        CHECK_FALSE(detail::induces_complete(g, m | (1ull << (v - 1))));
      }
    }
  }
}

TEST_CASE("classification") {
  auto fig1 = classify(figure1_graph());
  CHECK(fig1.is_block_graph);
  CHECK(fig1.bm_max == 3);
  CHECK(fig1.cut_vertices == VertexSet{4, 8});

  auto fig2 = classify(figure2_graph());
  CHECK(fig2.is_block_graph);
  CHECK(fig2.bm_max == 2);

  auto du = classify(disjoint_union(complete_graph(2), complete_graph(3)));
  CHECK(du.is_disjoint_union_of_completes);
  CHECK(du.component_complete_sizes == std::vector<int>{2, 3});

  CHECK_FALSE(classify(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})).is_block_graph);
}
