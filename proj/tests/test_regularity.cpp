#include <catch2/catch_amalgamated.hpp>

#include "gbei/field.hpp"
#include "gbei/regularity.hpp"

using namespace gbei;

namespace {

using F = PrimeField;
const F kField(32003);

Monomial mono(int nv, std::initializer_list<int> support) {
  Monomial m(static_cast<std::size_t>(nv), 0);
  for (int v : support) ++m[v];
  return m;
}

// entries of a (possibly partial) table restricted to j <= cap
std::map<std::pair<int, int>, long> truncate(const BettiTable& t, int cap) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [ij, v] : t.entries)
    if (ij.second <= cap && v != 0) out[ij] = v;
  return out;
}

}  // namespace

TEST_CASE("stanley-reisner complexes") {
  auto k = stanley_reisner(3, {mono(3, {0, 1}), mono(3, {1, 2})});
  REQUIRE(k.min_nonfaces.size() == 2);
  // redundant supersets are dropped
  auto k2 = stanley_reisner(3, {mono(3, {0}), mono(3, {0, 1})});
  CHECK(k2.min_nonfaces == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(stanley_reisner(2, {Monomial{2, 0}}), std::invalid_argument);
}

TEST_CASE("reduced homology of small complexes") {
  // two isolated points: H_0 has dimension 1
  auto pts = stanley_reisner(2, {mono(2, {0, 1})});
  auto h = reduced_homology_dims(kField, pts, 0b11);
  CHECK(h == std::map<int, long>{{0, 1}});

  // hollow triangle: H_1 has dimension 1
  auto tri = stanley_reisner(3, {mono(3, {0, 1, 2})});
  h = reduced_homology_dims(kField, tri, 0b111);
  CHECK(h == std::map<int, long>{{1, 1}});

  // cone: vertex 3 lies in no non-face, all homology vanishes
  auto cone = stanley_reisner(3, {mono(3, {0, 1})});
  CHECK(reduced_homology_dims(kField, cone, 0b111).empty());

  // restriction to the empty set: only H_{-1}
  CHECK(reduced_homology_dims(kField, tri, 0) == std::map<int, long>{{-1, 1}});

  // excluded vertex (a variable inside the ideal): empty complex again
  auto var = stanley_reisner(1, {mono(1, {0})});
  CHECK(reduced_homology_dims(kField, var, 0b1) == std::map<int, long>{{-1, 1}});
}

TEST_CASE("hochster betti numbers of monomial ideals") {
  // S/(xy): 0 <- S <- S(-2) <- 0
  auto k = stanley_reisner(2, {mono(2, {0, 1})});
  auto t = hochster_betti(kField, k);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 2) == 1);
  CHECK(t.entries.size() == 2);
  CHECK(t.regularity() == 1);

  // S/(xy, yz): beta_{1,2} = 2, beta_{2,3} = 1
  auto k2 = stanley_reisner(3, {mono(3, {0, 1}), mono(3, {1, 2})});
  auto t2 = hochster_betti(kField, k2);
  CHECK(t2.at(1, 2) == 2);
  CHECK(t2.at(2, 3) == 1);
  CHECK(t2.regularity() == 1);

  // complete intersection (ab, cd): Koszul resolution, reg = 2
  auto k3 = stanley_reisner(4, {mono(4, {0, 1}), mono(4, {2, 3})});
  auto t3 = hochster_betti(kField, k3);
  CHECK(t3.at(1, 2) == 2);
  CHECK(t3.at(2, 4) == 1);
  CHECK(t3.regularity() == 2);

  CHECK_THROWS_AS(hochster_betti(kField, k3, 3), CapacityError);
}

TEST_CASE("koszul homology agrees with hochster on monomial ideals") {
  // independent routes to the same Betti table
  struct Case {
    int nv;
    std::vector<Monomial> gens;
  };
  std::vector<Case> cases = {
      {2, {mono(2, {0, 1})}},
      {3, {mono(3, {0, 1}), mono(3, {1, 2})}},
      {4, {mono(4, {0, 1}), mono(4, {2, 3})}},
  };
  for (const auto& c : cases) {
    RingContext ctx = make_ring(1, c.nv);
    Ideal<F> ideal{ctx, {}};
    for (const auto& g : c.gens)
      ideal.gens.push_back(make_poly(kField, ctx.order, std::vector<Term<F>>{{g, kField.one()}}));
    auto gb = buchberger(kField, ideal);
    auto koszul = koszul_betti(kField, ctx, gb, c.nv + 1);
    auto hochster = hochster_betti(kField, stanley_reisner(c.nv, c.gens));
    CHECK(truncate(koszul, c.nv + 1) == truncate(hochster, c.nv + 1));
  }
}

TEST_CASE("polarization preserves the betti table") {
  // (x^2) polarizes to (x_1 x_2); reg(S/(x^2)) = 1
  int pol_vars = 0;
  auto pol = polarize({Monomial{2}}, 1, &pol_vars);
  REQUIRE(pol_vars == 2);
  auto t = hochster_betti(kField, stanley_reisner(pol_vars, pol));
  CHECK(t.at(1, 2) == 1);
  CHECK(t.regularity() == 1);
}

TEST_CASE("closed form for disjoint unions of complete graphs") {
  CHECK(closed_form_regularity(3, complete_graph(4)) == 2);
  CHECK(closed_form_regularity(2, complete_graph(4)) == 1);
  CHECK(closed_form_regularity(3, disjoint_union(complete_graph(2), complete_graph(3))) == 3);
  // isolated vertices contribute nothing
  CHECK(closed_form_regularity(3, disjoint_union(complete_graph(2), Graph(2))) == 1);
  CHECK_FALSE(closed_form_regularity(2, path_graph(3)).has_value());
}

TEST_CASE("regularity of complete graphs matches min{m-1, n-1} through the oracle") {
  for (int m : {2, 3}) {
    for (int n : {2, 3}) {
      auto res = regularity(m, complete_graph(n), RegStrategy::kHochster);
      CHECK(res.reg == std::min(m - 1, n - 1));
      CHECK(res.strategy == "hochster");
      CHECK(res.initial_squarefree);
    }
  }
}

TEST_CASE("regularity of a path via both oracles and both fields") {
  // J_{K_2, P_3}: reg(S/J) = 2
  auto hoch = regularity(2, path_graph(3), RegStrategy::kHochster);
  CHECK(hoch.reg == 2);
  auto kos = regularity(2, path_graph(3), RegStrategy::kKoszul);
  CHECK(kos.reg == 2);
  CHECK(kos.strategy == "koszul");
  auto rat = regularity(2, path_graph(3), RegStrategy::kHochster, 0);
  CHECK(rat.reg == 2);
  CHECK(rat.field == "QQ");
}

TEST_CASE("regularity dispatch") {
  auto res = regularity(3, disjoint_union(complete_graph(2), complete_graph(3)));
  CHECK(res.reg == 3);
  CHECK(res.strategy == "closed-form");
  CHECK_THROWS_AS(regularity(2, path_graph(3), RegStrategy::kClosedForm),
                  std::invalid_argument);
}

TEST_CASE("beta_1 of the initial ideal counts its minimal generators") {
  RingContext ctx = make_ring(2, 3);
  auto gb = buchberger(kField, gbei_ideal(kField, ctx, path_graph(3)));
  auto in = initial_ideal(gb);
  REQUIRE(in.squarefree);
  auto t = hochster_betti(kField, stanley_reisner(ctx, in));
  long b1 = 0;
  for (const auto& [ij, v] : t.entries)
    if (ij.first == 1) b1 += v;
  CHECK(b1 == static_cast<long>(in.gens.size()));
}
