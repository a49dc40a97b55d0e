#pragma once

// Sparse multivariate polynomials over an m x n variable grid x_{ij}, with
// degrevlex / lex / block-elimination term orders. Exponents are tiny at
// this scale; everything stays exact.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbei {

using Monomial = std::vector<std::uint8_t>;  // exponent vector, length = #variables

inline int total_degree(const Monomial& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return out;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>(a[i] - b[i]);
  return out;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline bool is_squarefree(const Monomial& a) {
  for (auto e : a)
    if (e > 1) return false;
  return true;
}

struct TermOrder {
  enum class Kind { kDegRevLex, kLex, kBlockElim };
  Kind kind = Kind::kDegRevLex;
  // For block elimination: variables in the first block (compared degrevlex
  // among themselves); ties broken degrevlex on the remaining variables.
  std::vector<int> first_block;

  static TermOrder degrevlex() { return {Kind::kDegRevLex, {}}; }
  static TermOrder lex() { return {Kind::kLex, {}}; }
  static TermOrder block_elim(std::vector<int> first) {
    return {Kind::kBlockElim, std::move(first)};
  }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::kLex: {
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      }
      case Kind::kDegRevLex:
        return degrevlex_cmp(a, b, nullptr);
      case Kind::kBlockElim: {
        std::vector<bool> in_first(a.size(), false);
        for (int v : first_block) in_first[static_cast<std::size_t>(v)] = true;
        int da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (in_first[i]) {
            da += a[i];
            db += b[i];
          }
        if (da != db) return da > db ? 1 : -1;
        // within-block revlex, then full degrevlex on the rest
        for (std::size_t i = a.size(); i-- > 0;) {
          if (!in_first[i] || a[i] == b[i]) continue;
          return a[i] < b[i] ? 1 : -1;
        }
        std::vector<bool> mask(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) mask[i] = !in_first[i];
        return degrevlex_cmp(a, b, &mask);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  static int degrevlex_cmp(const Monomial& a, const Monomial& b, const std::vector<bool>* mask) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask && !(*mask)[i]) continue;
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (mask && !(*mask)[i]) continue;
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

// The ambient ring data: an m x n grid of variables x_{ij}, row-major.
struct RingContext {
  int m = 0;
  int n = 0;
  std::int64_t prime = 32003;  // 0 means rationals
  TermOrder order = TermOrder::degrevlex();

  int num_vars() const { return m * n; }
  int var_index(int i, int j) const { return (i - 1) * n + (j - 1); }
  std::pair<int, int> var_grid(int idx) const { return {idx / n + 1, idx % n + 1}; }
  std::string var_name(int idx) const {
    auto [i, j] = var_grid(idx);
    return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  bool same_ring(const RingContext& o) const {
    return m == o.m && n == o.n && prime == o.prime;
  }
};

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;
};

// Terms sorted strictly descending in the active order; no zero coefficients.
template <class F>
struct Polynomial {
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lead_mono() const { return terms.front().mono; }
  const typename F::Elem& lead_coeff() const { return terms.front().coeff; }
  int degree() const { return terms.empty() ? -1 : total_degree(terms.front().mono); }
};

template <class F>
Polynomial<F> make_poly(const F& field, const TermOrder& order,
                        std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
    return order.greater(a.mono, b.mono);
  });
  Polynomial<F> out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = field.add(out.terms.back().coeff, t.coeff);
      if (field.is_zero(out.terms.back().coeff)) out.terms.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

template <class F>
Polynomial<F> poly_add(const F& field, const TermOrder& order, const Polynomial<F>& a,
                       const Polynomial<F>& b) {
  Polynomial<F> out;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && order.greater(a.terms[i].mono, b.terms[j].mono))) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || order.greater(b.terms[j].mono, a.terms[i].mono)) {
      out.terms.push_back(b.terms[j++]);
    } else {
      auto c = field.add(a.terms[i].coeff, b.terms[j].coeff);
      if (!field.is_zero(c)) out.terms.push_back({a.terms[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
Polynomial<F> poly_scale(const F& field, const Polynomial<F>& a, const typename F::Elem& c) {
  Polynomial<F> out;
  if (field.is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mono, field.mul(t.coeff, c)});
  return out;
}

template <class F>
Polynomial<F> poly_neg(const F& field, const Polynomial<F>& a) {
  Polynomial<F> out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.push_back({t.mono, field.neg(t.coeff)});
  return out;
}

template <class F>
Polynomial<F> poly_sub(const F& field, const TermOrder& order, const Polynomial<F>& a,
                       const Polynomial<F>& b) {
  return poly_add(field, order, a, poly_neg(field, b));
}

// a - c * mono * b  (the division-step workhorse)
template <class F>
Polynomial<F> poly_axpy(const F& field, const TermOrder& order, const Polynomial<F>& a,
                        const typename F::Elem& c, const Monomial& mono,
                        const Polynomial<F>& b) {
  Polynomial<F> shifted;
  shifted.terms.reserve(b.terms.size());
  for (const auto& t : b.terms)
    shifted.terms.push_back({mono_mul(mono, t.mono), field.neg(field.mul(c, t.coeff))});
  return poly_add(field, order, a, shifted);
}

template <class F>
Polynomial<F> poly_mul(const F& field, const TermOrder& order, const Polynomial<F>& a,
                       const Polynomial<F>& b) {
  std::vector<Term<F>> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms)
      terms.push_back({mono_mul(s.mono, t.mono), field.mul(s.coeff, t.coeff)});
  return make_poly(field, order, std::move(terms));
}

template <class F>
Polynomial<F> poly_monic(const F& field, const Polynomial<F>& a) {
  if (a.is_zero()) return a;
  return poly_scale(field, a, field.inv(a.lead_coeff()));
}

template <class F>
bool poly_equal(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].mono != b.terms[i].mono || a.terms[i].coeff != b.terms[i].coeff) return false;
  return true;
}

// Canonical text form: "c*x_{i,j}*x_{k,l} + ...", terms in descending order.
template <class F>
std::string poly_to_string(const F& field, const RingContext& ctx, const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms) {
    std::string c = field.to_string(t.coeff);
    if (!first) {
      if (!c.empty() && c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    first = false;
    std::string monos;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) {
        if (!monos.empty()) monos += "*";
        monos += ctx.var_name(static_cast<int>(i));
      }
    }
    if (monos.empty()) {
      out += c;
    } else if (c == "1") {
      out += monos;
    } else if (c == "-1") {
      out += "-" + monos;
    } else {
      out += c + "*" + monos;
    }
  }
  return out;
}

}  // namespace gbei
