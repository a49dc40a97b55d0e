#pragma once

// Construction of the pair ideals J_{G1,G2}, the generalized binomial edge
// ideals J_{K_m,G}, the minimal primes P_T, and machine checks of the two
// decomposition identities the regularity recursion relies on.

#include <stdexcept>
#include <string>
#include <vector>

#include "gbei/graph.hpp"
#include "gbei/groebner.hpp"
#include "gbei/poly.hpp"

namespace gbei {

inline RingContext make_ring(int m, int n, std::int64_t prime = 32003,
                             TermOrder order = TermOrder::degrevlex()) {
  if (m < 1 || n < 0) throw std::invalid_argument("bad ring dimensions");
  RingContext ctx;
  ctx.m = m;
  ctx.n = n;
  ctx.prime = prime;
  ctx.order = order;
  return ctx;
}

// The 2-minor [i,j | k,l] = x_{ik} x_{jl} - x_{il} x_{jk}.
template <class F>
Polynomial<F> minor_generator(const F& field, const RingContext& ctx, std::pair<int, int> e1,
                              std::pair<int, int> e2) {
  auto [i, j] = e1;
  auto [k, l] = e2;
  if (!(1 <= i && i < j && j <= ctx.m)) throw std::out_of_range("row edge out of range");
  if (!(1 <= k && k < l && l <= ctx.n)) throw std::out_of_range("column edge out of range");
  Monomial a(static_cast<std::size_t>(ctx.num_vars()), 0);
  Monomial b = a;
  ++a[ctx.var_index(i, k)];
  ++a[ctx.var_index(j, l)];
  ++b[ctx.var_index(i, l)];
  ++b[ctx.var_index(j, k)];
  return make_poly(field, ctx.order,
                   std::vector<Term<F>>{{a, field.one()}, {b, field.neg(field.one())}});
}

// J_{G1,G2}: one minor per (e1, e2), e1 over rows, e2 over columns.
template <class F>
Ideal<F> pair_ideal(const F& field, const RingContext& ctx, const Graph& g1, const Graph& g2) {
  if (g1.n() != ctx.m || g2.n() != ctx.n) throw std::invalid_argument("graph/ring size mismatch");
  Ideal<F> ideal{ctx, {}};
  for (auto e1 : g1.edges())
    for (auto e2 : g2.edges()) ideal.gens.push_back(minor_generator(field, ctx, e1, e2));
  return ideal;
}

// J_{K_m,G} in the ring ctx (which must be m x G.n()).
template <class F>
Ideal<F> gbei_ideal(const F& field, const RingContext& ctx, const Graph& g) {
  return pair_ideal(field, ctx, complete_graph(ctx.m), g);
}

// J_{K_m, complete graph on the column subset `verts`}, embedded in ctx.
template <class F>
Ideal<F> complete_on_columns(const F& field, const RingContext& ctx, const VertexSet& verts) {
  Ideal<F> ideal{ctx, {}};
  for (int i = 1; i <= ctx.m; ++i)
    for (int j = i + 1; j <= ctx.m; ++j)
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          ideal.gens.push_back(minor_generator(field, ctx, {i, j}, {verts[a], verts[b]}));
  return ideal;
}

// Variables x_{ij} for j in `cols`, as an ideal.
template <class F>
Ideal<F> column_variable_ideal(const F& field, const RingContext& ctx, const VertexSet& cols) {
  Ideal<F> ideal{ctx, {}};
  for (int j : cols) {
    for (int i = 1; i <= ctx.m; ++i) {
      Monomial mono(static_cast<std::size_t>(ctx.num_vars()), 0);
      ++mono[ctx.var_index(i, j)];
      ideal.gens.push_back(
          make_poly(field, ctx.order, std::vector<Term<F>>{{mono, field.one()}}));
    }
  }
  return ideal;
}

// P_T(K_m, G): column variables over T plus, per component of G - T, the
// generalized binomial edge ideal of the completed component.
template <class F>
Ideal<F> prime_PT(const F& field, const RingContext& ctx, const Graph& g, const VertexSet& t) {
  if (g.n() != ctx.n) throw std::invalid_argument("graph/ring size mismatch");
  Ideal<F> ideal = column_variable_ideal(field, ctx, t);
  std::uint64_t keep = g.full_mask() & ~detail::set_to_mask(t);
  for (auto comp : detail::component_masks(g, keep)) {
    auto part = complete_on_columns(field, ctx, detail::mask_to_set(comp));
    ideal.gens.insert(ideal.gens.end(), part.gens.begin(), part.gens.end());
  }
  return ideal;
}

struct DecompositionReport {
  int m = 0;
  std::string graph6;
  std::string identity;
  bool verdict = false;
  std::vector<std::size_t> gb_sizes;
  std::vector<std::string> notes;
  long elapsed_ms = 0;
};

// J_{K_m,G} = cap over cutsets T of P_T(K_m, G), plus per-T containment.
template <class F>
DecompositionReport verify_prime_decomposition(const F& field, int m, const Graph& g,
                                               std::int64_t prime = 32003,
                                               int budget_vars = 24) {
  if (m * g.n() + 1 > budget_vars) throw CapacityError("prime decomposition budget exceeded");
  RingContext ctx = make_ring(m, g.n(), prime);
  DecompositionReport report;
  report.m = m;
  report.graph6 = to_graph6(g);
  report.identity = "J = intersection of P_T over cutsets";

  Ideal<F> j = gbei_ideal(field, ctx, g);
  auto jgb = buchberger(field, j);
  report.gb_sizes.push_back(jgb.polys.size());

  auto all_cutsets = cutsets(g);
  bool containments_ok = true;
  for (const auto& t : all_cutsets) {
    auto pt = prime_PT(field, ctx, g, t);
    auto ptgb = buchberger(field, pt);
    for (const auto& gen : j.gens) {
      if (!ideal_contains(field, ptgb, gen)) {
        containments_ok = false;
        report.notes.push_back("containment J in P_T fails for some T");
        break;
      }
    }
  }

  std::optional<Ideal<F>> inter;
  for (const auto& t : all_cutsets) {
    auto pt = prime_PT(field, ctx, g, t);
    inter = inter ? ideal_intersect(field, *inter, pt) : pt;
  }
  bool equal = inter ? ideal_equal(field, j, *inter) : g.edge_count() == 0;
  report.verdict = equal && containments_ok;
  return report;
}

// Decomposition identities at an internal vertex v:
//   (a) J_{K_m,G} = J_{K_m,G_v} cap ((x_{iv}) + J_{K_m,G-v})
//   (b) J_{K_m,G_v} + ((x_{iv}) + J_{K_m,G-v}) = (x_{iv}) + J_{K_m,G_v - v}
// Deleted-vertex ideals stay embedded in the full m x n ring (column v
// present but unused by their generators).
template <class F>
DecompositionReport verify_vertex_decomposition(const F& field, int m, const Graph& g, int v,
                                                std::int64_t prime = 32003,
                                                int budget_vars = 24) {
  if (is_free_vertex(g, v)) throw std::invalid_argument("vertex must be internal");
  if (m * g.n() + 1 > budget_vars) throw CapacityError("vertex decomposition budget exceeded");
  RingContext ctx = make_ring(m, g.n(), prime);
  DecompositionReport report;
  report.m = m;
  report.graph6 = to_graph6(g);
  report.identity = "J = J_{G_v} cap ((x_iv)+J_{G-v}); sum identity";

  // Embed G-v and G_v-v in the ambient ring: keep n columns, drop edges at v.
  auto embed_minus_v = [&](const Graph& h) {
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : h.edges())
      if (a != v && b != v) edges.emplace_back(a, b);
    return Graph(h.n(), std::move(edges));
  };

  Graph gv = neighbor_completion(g, v);
  Ideal<F> j = gbei_ideal(field, ctx, g);
  Ideal<F> jv = gbei_ideal(field, ctx, gv);
  Ideal<F> j_minus = gbei_ideal(field, ctx, embed_minus_v(g));
  Ideal<F> jv_minus = gbei_ideal(field, ctx, embed_minus_v(gv));
  Ideal<F> xv = column_variable_ideal(field, ctx, {v});

  Ideal<F> right = ideal_sum(xv, j_minus);
  bool intersection_ok = ideal_equal(field, j, ideal_intersect(field, jv, right));
  bool sum_ok = ideal_equal(field, ideal_sum(jv, right), ideal_sum(xv, jv_minus));
  if (!intersection_ok) report.notes.push_back("intersection identity fails");
  if (!sum_ok) report.notes.push_back("sum identity fails");
  report.verdict = intersection_ok && sum_ok;
  return report;
}

}  // namespace gbei
