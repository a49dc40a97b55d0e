#include <catch2/catch_amalgamated.hpp>

#include "gbei/field.hpp"
#include "gbei/ideals.hpp"

using namespace gbei;

namespace {
using F = PrimeField;
const F kField(32003);
}  // namespace

TEST_CASE("minor generators") {
  RingContext ctx = make_ring(3, 4);
  auto p = minor_generator(kField, ctx, {1, 3}, {2, 4});
  CHECK(p.terms.size() == 2);
  CHECK(total_degree(p.terms[0].mono) == 2);
  // x_{1,2} x_{3,4} and x_{1,4} x_{3,2} appear
  Monomial diag(12, 0), anti(12, 0);
  ++diag[ctx.var_index(1, 2)];
  ++diag[ctx.var_index(3, 4)];
  ++anti[ctx.var_index(1, 4)];
  ++anti[ctx.var_index(3, 2)];
  bool found_diag = false, found_anti = false;
  for (const auto& t : p.terms) {
    if (t.mono == diag) found_diag = true;
    if (t.mono == anti) found_anti = true;
  }
  CHECK(found_diag);
  CHECK(found_anti);
  CHECK_THROWS_AS(minor_generator(kField, ctx, {2, 1}, {1, 2}), std::out_of_range);
  CHECK_THROWS_AS(minor_generator(kField, ctx, {1, 2}, {1, 5}), std::out_of_range);
}

TEST_CASE("generator counts") {
  // one minor per (row edge, column edge)
  CHECK(gbei_ideal(kField, make_ring(2, 3), path_graph(3)).gens.size() == 2);
  CHECK(gbei_ideal(kField, make_ring(3, 3), path_graph(3)).gens.size() == 6);
  CHECK(gbei_ideal(kField, make_ring(2, 4), complete_graph(4)).gens.size() == 6);
  CHECK(pair_ideal(kField, make_ring(3, 3), path_graph(3), path_graph(3)).gens.size() == 4);
  CHECK(gbei_ideal(kField, make_ring(2, 3), Graph(3)).gens.empty());
}

TEST_CASE("prime P_T structure") {
  // Figure 2, T = {3}: m column variables + minors of K_2 on {1,2} and K_3 on {4,5,6}
  Graph g = figure2_graph();
  for (int m : {2, 3}) {
    RingContext ctx = make_ring(m, 6);
    auto pt = prime_PT(kField, ctx, g, {3});
    std::size_t binom = static_cast<std::size_t>(m) * (m - 1) / 2;
    CHECK(pt.gens.size() == static_cast<std::size_t>(m) + binom * (1 + 3));
  }
  // T = {}: single component completed to K_6
  auto p_empty = prime_PT(kField, make_ring(2, 6), g, {});
  CHECK(p_empty.gens.size() == 15);
}

TEST_CASE("prime decomposition holds on small paths and cycles") {
  for (const Graph& g : {path_graph(3), path_graph(4), Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})}) {
    auto rep = verify_prime_decomposition(kField, 2, g);
    CHECK(rep.verdict);
  }
  CHECK(verify_prime_decomposition(kField, 3, path_graph(3)).verdict);
  CHECK_THROWS_AS(verify_prime_decomposition(kField, 3, complete_graph(8)), CapacityError);
}

TEST_CASE("vertex decomposition identities hold at internal vertices") {
  CHECK(verify_vertex_decomposition(kField, 2, path_graph(3), 2).verdict);
  CHECK(verify_vertex_decomposition(kField, 2, path_graph(4), 2).verdict);
  CHECK(verify_vertex_decomposition(kField, 3, path_graph(3), 2).verdict);
  CHECK_THROWS_AS(verify_vertex_decomposition(kField, 2, path_graph(3), 1),
                  std::invalid_argument);
}
