#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria, reduced
// bases, ideal membership / equality / intersection, and initial ideals.
// Deterministic throughout: normal pair-selection strategy (lcm degree,
// then index), fixed tie-breaking.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gbei/poly.hpp"

namespace gbei {

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
struct Ideal {
  RingContext ctx;
  std::vector<Polynomial<F>> gens;
};

template <class F>
struct GroebnerBasis {
  RingContext ctx;
  std::vector<Polynomial<F>> polys;  // reduced: monic, interreduced
};

// Full normal form: no monomial of the result is divisible by any lead of B.
template <class F>
Polynomial<F> normal_form(const F& field, const TermOrder& order, Polynomial<F> f,
                          const std::vector<Polynomial<F>>& basis) {
  Polynomial<F> result;
  while (!f.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (divides(g.lead_mono(), f.lead_mono())) {
        auto q = mono_div(f.lead_mono(), g.lead_mono());
        auto c = field.div(f.lead_coeff(), g.lead_coeff());
        f = poly_axpy(field, order, f, c, q, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.terms.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  return result;
}

template <class F>
Polynomial<F> normal_form(const F& field, const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(field, gb.ctx.order, f, gb.polys);
}

template <class F>
Polynomial<F> s_polynomial(const F& field, const TermOrder& order, const Polynomial<F>& f,
                           const Polynomial<F>& g) {
  auto l = mono_lcm(f.lead_mono(), g.lead_mono());
  Polynomial<F> zero;
  auto a = poly_axpy(field, order, zero, field.neg(field.inv(f.lead_coeff())),
                     mono_div(l, f.lead_mono()), f);
  return poly_axpy(field, order, a, field.inv(g.lead_coeff()),
                   mono_div(l, g.lead_mono()), g);
}

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int deg;
};

// Gebauer-Moeller update of the pair set when basis element `t` arrives.
template <class F>
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial<F>>& basis,
                  std::size_t t) {
  const Monomial& lt = basis[t].lead_mono();
  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    Monomial l = mono_lcm(basis[i].lead_mono(), lt);
    fresh.push_back({i, t, std::move(l), 0});
  }
  // Criterion M: drop (i,t) if lcm(j,t) properly divides lcm(i,t) for some j.
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[a] || !keep[b]) continue;
      if (fresh[b].lcm != fresh[a].lcm && divides(fresh[b].lcm, fresh[a].lcm)) keep[a] = false;
    }
  // Criterion F: among equal lcms keep the lowest index.
  for (std::size_t a = 0; a < fresh.size(); ++a)
    for (std::size_t b = a + 1; b < fresh.size(); ++b)
      if (keep[a] && keep[b] && fresh[a].lcm == fresh[b].lcm) keep[b] = false;
  // Buchberger's product criterion.
  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a] && mono_coprime(basis[fresh[a].i].lead_mono(), lt)) keep[a] = false;
  // Prune old pairs whose lcm is divisible by lt but is not equal to either
  // sub-lcm with t (chain criterion).
  std::vector<Pair> survivors;
  for (auto& p : pairs) {
    if (divides(lt, p.lcm) &&
        mono_lcm(basis[p.i].lead_mono(), lt) != p.lcm &&
        mono_lcm(basis[p.j].lead_mono(), lt) != p.lcm)
      continue;
    survivors.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    fresh[a].deg = total_degree(fresh[a].lcm);
    survivors.push_back(std::move(fresh[a]));
  }
  pairs = std::move(survivors);
}

}  // namespace detail

// Reduced Groebner basis. `pair_budget` caps the number of S-pair reductions.
template <class F>
GroebnerBasis<F> buchberger(const F& field, const Ideal<F>& ideal,
                            std::size_t pair_budget = 5'000'000) {
  const TermOrder& order = ideal.ctx.order;
  std::vector<Polynomial<F>> basis;
  std::vector<detail::Pair> pairs;
  for (const auto& g : ideal.gens) {
    auto nf = normal_form(field, order, g, basis);
    if (nf.is_zero()) continue;
    basis.push_back(poly_monic(field, nf));
    detail::update_pairs(pairs, basis, basis.size() - 1);
  }
  for (auto& p : pairs) p.deg = total_degree(p.lcm);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree, ties by (i, j)
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
        best = k;
    }
    detail::Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (++processed > pair_budget) throw CapacityError("buchberger pair budget exceeded");

    auto s = s_polynomial(field, order, basis[p.i], basis[p.j]);
    auto nf = normal_form(field, order, s, basis);
    if (nf.is_zero()) continue;
    basis.push_back(poly_monic(field, nf));
    detail::update_pairs(pairs, basis, basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].lead_mono(), basis[i].lead_mono()) &&
          (basis[j].lead_mono() != basis[i].lead_mono() || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Reduce tails.
  std::vector<Polynomial<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto nf = normal_form(field, order, minimal[i], others);
    if (!nf.is_zero()) reduced.push_back(poly_monic(field, nf));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return order.greater(a.lead_mono(), b.lead_mono());
  });
  return {ideal.ctx, std::move(reduced)};
}

template <class F>
bool ideal_contains(const F& field, const GroebnerBasis<F>& gb, const Polynomial<F>& f) {
  return normal_form(field, f, gb).is_zero();
}

template <class F>
bool ideal_equal(const F& field, const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ctx.same_ring(b.ctx)) throw std::invalid_argument("ring context mismatch");
  auto ga = buchberger(field, a);
  auto gb = buchberger(field, b);
  for (const auto& f : a.gens)
    if (!ideal_contains(field, gb, f)) return false;
  for (const auto& f : b.gens)
    if (!ideal_contains(field, ga, f)) return false;
  return true;
}

// I cap J via the t*I + (1-t)*J elimination trick; the auxiliary variable is
// prepended (index 0) and ranked above everything by a block order.
template <class F>
Ideal<F> ideal_intersect(const F& field, const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ctx.same_ring(b.ctx)) throw std::invalid_argument("ring context mismatch");
  int nv = a.ctx.num_vars();
  // Extended ring: variable 0 is t, original variable i becomes i+1. Only
  // num_vars and the order matter for the elimination computation.
  RingContext ext_ctx;
  ext_ctx.m = 1;
  ext_ctx.n = nv + 1;
  ext_ctx.prime = a.ctx.prime;
  ext_ctx.order = TermOrder::block_elim({0});

  auto lift = [&](const Polynomial<F>& p, bool with_t, bool with_one_minus_t) {
    std::vector<Term<F>> terms;
    for (const auto& t : p.terms) {
      Monomial m(static_cast<std::size_t>(nv) + 1, 0);
      std::copy(t.mono.begin(), t.mono.end(), m.begin() + 1);
      if (with_t || with_one_minus_t) {
        Monomial mt = m;
        ++mt[0];
        if (with_t) terms.push_back({mt, t.coeff});
        if (with_one_minus_t) {
          terms.push_back({m, t.coeff});
          terms.push_back({mt, field.neg(t.coeff)});
        }
      } else {
        terms.push_back({m, t.coeff});
      }
    }
    return make_poly(field, ext_ctx.order, std::move(terms));
  };

  Ideal<F> extended{ext_ctx, {}};
  for (const auto& f : a.gens) extended.gens.push_back(lift(f, true, false));
  for (const auto& g : b.gens) extended.gens.push_back(lift(g, false, true));
  auto gb = buchberger(field, extended);

  Ideal<F> out{a.ctx, {}};
  for (const auto& p : gb.polys) {
    bool has_t = false;
    for (const auto& t : p.terms)
      if (t.mono[0] > 0) has_t = true;
    if (has_t) continue;
    std::vector<Term<F>> terms;
    for (const auto& t : p.terms) {
      Monomial m(t.mono.begin() + 1, t.mono.end());
      terms.push_back({std::move(m), t.coeff});
    }
    out.gens.push_back(make_poly(field, a.ctx.order, std::move(terms)));
  }
  return out;
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (!a.ctx.same_ring(b.ctx)) throw std::invalid_argument("ring context mismatch");
  Ideal<F> out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

struct InitialIdeal {
  std::vector<Monomial> gens;  // minimal monomial generators
  bool squarefree = false;
};

template <class F>
InitialIdeal initial_ideal(const GroebnerBasis<F>& gb) {
  InitialIdeal out;
  out.squarefree = true;
  for (const auto& p : gb.polys) {
    out.gens.push_back(p.lead_mono());
    if (!is_squarefree(p.lead_mono())) out.squarefree = false;
  }
  return out;
}

}  // namespace gbei
