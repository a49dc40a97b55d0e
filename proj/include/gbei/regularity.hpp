#pragma once

// Exact Castelnuovo-Mumford regularity at desk scale. Main route: Groebner
// basis -> squarefree initial ideal -> Betti table via Hochster's formula
// (reduced simplicial homology of induced subcomplexes). Independent
// cross-check: graded Koszul homology of the binomial ideal itself. Closed
// form for disjoint unions of complete graphs.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gbei/field.hpp"
#include "gbei/graph.hpp"
#include "gbei/groebner.hpp"
#include "gbei/ideals.hpp"
#include "gbei/poly.hpp"

namespace gbei {

// ---------------------------------------------------------------------------
// Betti tables

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (i, j) -> beta_{i,j}
  bool partial = false;
  int computed_through_degree = -1;  // only meaningful when partial

  void add(int i, int j, long v) {
    if (v != 0) entries[{i, j}] += v;
  }
  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int regularity() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
      if (v != 0) r = std::max(r, ij.second - ij.first);
    return r;
  }
};

// ---------------------------------------------------------------------------
// Stanley-Reisner complexes and reduced homology

struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::uint64_t> min_nonfaces;  // antichain of vertex masks (bit v = vertex v+1)
};

// Complex whose minimal non-faces are the supports of the generators.
// Generators must be squarefree monomials; redundant supports are dropped.
inline SimplicialComplex stanley_reisner(int num_vertices, const std::vector<Monomial>& gens) {
  SimplicialComplex k;
  k.num_vertices = num_vertices;
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    if (!is_squarefree(g)) throw std::invalid_argument("generator is not squarefree");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i]) s |= 1ull << i;
    if (s == 0) throw std::invalid_argument("unit generator");
    supports.push_back(s);
  }
  for (auto s : supports) {
    bool minimal = true;
    for (auto t : supports)
      if (t != s && (t & s) == t) minimal = false;
    if (minimal && std::find(k.min_nonfaces.begin(), k.min_nonfaces.end(), s) ==
                       k.min_nonfaces.end())
      k.min_nonfaces.push_back(s);
  }
  return k;
}

inline SimplicialComplex stanley_reisner(const RingContext& ctx, const InitialIdeal& in) {
  if (!in.squarefree) throw std::invalid_argument("initial ideal is not squarefree");
  return stanley_reisner(ctx.num_vars(), in.gens);
}

namespace detail {

// Sparse column-reduction rank over a field.
template <class F>
class SparseRank {
 public:
  explicit SparseRank(const F& field, std::size_t rows) : field_(field), pivot_owner_(rows) {}

  // col: sorted (row, coeff) pairs. Returns true if the column was independent.
  bool add_column(std::vector<std::pair<std::size_t, typename F::Elem>> col) {
    while (!col.empty()) {
      std::size_t piv = col.back().first;  // largest row index
      auto& owner = pivot_owner_[piv];
      if (owner.empty()) {
        owner = std::move(col);
        ++rank_;
        return true;
      }
      auto factor = field_.div(col.back().second, owner.back().second);
      col = axpy(col, factor, owner);
    }
    return false;
  }

  std::size_t rank() const { return rank_; }

 private:
  using Col = std::vector<std::pair<std::size_t, typename F::Elem>>;

  Col axpy(const Col& a, const typename F::Elem& f, const Col& b) const {
    Col out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, field_.neg(field_.mul(f, b[j].second)));
        ++j;
      } else {
        auto c = field_.sub(a[i].second, field_.mul(f, b[j].second));
        if (!field_.is_zero(c)) out.emplace_back(a[i].first, c);
        ++i;
        ++j;
      }
    }
    return out;
  }

  const F& field_;
  std::vector<Col> pivot_owner_;
  std::size_t rank_ = 0;
};

}  // namespace detail

// Reduced homology dimensions of the induced subcomplex on W. Key d -> dim.
// The restriction to the empty set has H_{-1} of dimension 1.
template <class F>
std::map<int, long> reduced_homology_dims(const F& field, const SimplicialComplex& k,
                                          std::uint64_t w) {
  std::map<int, long> out;
  std::vector<std::uint64_t> nonfaces;
  std::uint64_t covered = 0;
  for (auto nf : k.min_nonfaces)
    if ((nf & w) == nf) {
      nonfaces.push_back(nf);
      covered |= nf;
    }
  if (w != 0 && covered != w) return out;  // some vertex in every facet: cone
  // Vertices that are themselves non-faces are simply absent from the complex.
  std::uint64_t verts = 0;
  for (int v = 0; v < k.num_vertices; ++v) {
    std::uint64_t bit = 1ull << v;
    if (!(w & bit)) continue;
    bool excluded = false;
    for (auto nf : nonfaces)
      if (nf == bit) excluded = true;
    if (!excluded) verts |= bit;
  }
  if (verts == 0) {
    out[-1] = 1;  // only the empty face
    return out;
  }

  // Enumerate faces by cardinality.
  std::vector<std::vector<std::uint64_t>> faces;  // faces[c] = masks of cardinality c+1
  std::vector<std::uint64_t> frontier{0};
  std::vector<int> vlist = detail::mask_to_set(verts);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto f : frontier) {
      int start = f ? 64 - __builtin_clzll(f) + 1 : 1;
      for (int v : vlist) {
        if (v < start) continue;
        std::uint64_t cand = f | (1ull << (v - 1));
        bool ok = true;
        for (auto nf : nonfaces)
          if ((nf & cand) == nf) {
            ok = false;
            break;
          }
        if (ok) next.push_back(cand);
      }
    }
    if (next.empty()) break;
    faces.push_back(next);
    frontier = std::move(next);
  }

  // Boundary ranks: rank[d] = rank of d_d : C_d -> C_{d-1}.
  int top = static_cast<int>(faces.size()) - 1;  // max face dimension
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  rank[0] = 1;  // d_0 : C_0 -> C_{-1} is the all-ones row, rank 1 when C_0 != 0
  for (int d = 1; d <= top; ++d) {
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    for (std::size_t i = 0; i < faces[d - 1].size(); ++i) row_index[faces[d - 1][i]] = i;
    detail::SparseRank<F> ranker(field, faces[d - 1].size());
    for (auto f : faces[d]) {
      std::vector<std::pair<std::size_t, typename F::Elem>> col;
      int sign = 0;
      for (std::uint64_t rest = f; rest; rest &= rest - 1, ++sign) {
        std::uint64_t sub = f & ~(rest & -rest);
        auto c = (sign % 2 == 0) ? field.one() : field.neg(field.one());
        col.emplace_back(row_index.at(sub), c);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      ranker.add_column(std::move(col));
    }
    rank[static_cast<std::size_t>(d)] = ranker.rank();
  }

  for (int d = -1; d <= top; ++d) {
    long fd = d < 0 ? 1 : static_cast<long>(faces[d].size());
    long rd = d < 0 ? 0 : static_cast<long>(rank[static_cast<std::size_t>(d)]);
    long rd1 = d + 1 <= top ? static_cast<long>(rank[static_cast<std::size_t>(d + 1)]) : 0;
    long h = fd - rd - rd1;
    if (h != 0) out[d] = h;
  }
  return out;
}

// Hochster's formula: beta_{i,j}(S/I) = sum over |W| = j of
// dim H_{j-i-1} of the restriction to W. Only subsets of the union of
// generator supports can contribute.
template <class F>
BettiTable hochster_betti(const F& field, const SimplicialComplex& k, int vertex_cap = 20) {
  std::uint64_t support = 0;
  for (auto nf : k.min_nonfaces) support |= nf;
  int s = __builtin_popcountll(support);
  if (s > vertex_cap) throw CapacityError("hochster vertex cap exceeded");

  std::vector<int> bits = detail::mask_to_set(support);
  BettiTable table;
  table.add(0, 0, 1);  // the empty W contributes H_{-1} of the irrelevant complex
  std::uint64_t count = 1ull << s;
  for (std::uint64_t sel = 1; sel < count; ++sel) {
    std::uint64_t w = 0;
    for (int b = 0; b < s; ++b)
      if (sel & (1ull << b)) w |= 1ull << (bits[static_cast<std::size_t>(b)] - 1);
    int j = __builtin_popcountll(w);
    for (auto [d, h] : reduced_homology_dims(field, k, w)) table.add(j - d - 1, j, h);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Polarization (used to bound regularity when an initial ideal fails the
// squarefree check; reg is invariant under polarization).

inline std::vector<Monomial> polarize(const std::vector<Monomial>& gens, int num_vars,
                                      int* out_vars) {
  std::vector<int> max_exp(static_cast<std::size_t>(num_vars), 0);
  for (const auto& g : gens)
    for (int v = 0; v < num_vars; ++v) max_exp[v] = std::max<int>(max_exp[v], g[v]);
  std::vector<int> offset(static_cast<std::size_t>(num_vars) + 1, 0);
  for (int v = 0; v < num_vars; ++v) offset[v + 1] = offset[v] + std::max(max_exp[v], 1);
  int total = offset[num_vars];
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    Monomial p(static_cast<std::size_t>(total), 0);
    for (int v = 0; v < num_vars; ++v)
      for (int e = 0; e < g[v]; ++e) p[offset[v] + e] = 1;
    out.push_back(std::move(p));
  }
  *out_vars = total;
  return out;
}

// ---------------------------------------------------------------------------
// Koszul homology Betti numbers (multigraded block decomposition)

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 14695981039346656037ull;
    for (auto x : m) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Koszul homology per multigraded block. The ideals here are bigraded (row
// and column degrees), which splits the complex into many tiny blocks; for
// non-bigraded input we fall back to the total-degree grading.
template <class F>
class KoszulEngine {
 public:
  KoszulEngine(const F& field, const RingContext& ctx, const GroebnerBasis<F>& gb)
      : field_(field), ctx_(ctx), gb_(gb) {
    for (const auto& p : gb.polys) leads_.push_back(p.lead_mono());
    bigraded_ = true;
    for (const auto& p : gb.polys)
      if (!is_bihomogeneous(p)) bigraded_ = false;
  }

  bool is_standard(const Monomial& u) const {
    for (const auto& l : leads_)
      if (divides(l, u)) return false;
    return true;
  }

  std::vector<Monomial> standard_monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(ctx_.num_vars()), 0);
    enumerate(cur, 0, d, out);
    return out;
  }

  // Multidegree: concatenated row degrees and column degrees (bigraded case)
  // or the single total degree.
  std::vector<int> multidegree(const Monomial& u) const {
    std::vector<int> md;
    if (bigraded_) {
      md.assign(static_cast<std::size_t>(ctx_.m + ctx_.n), 0);
      for (int idx = 0; idx < ctx_.num_vars(); ++idx) {
        auto [i, j] = ctx_.var_grid(idx);
        md[i - 1] += u[idx];
        md[ctx_.m + j - 1] += u[idx];
      }
    } else {
      md = {total_degree(u)};
    }
    return md;
  }

  // NF of x_t * u expressed in standard monomials (registered lazily).
  const std::vector<std::pair<Monomial, typename F::Elem>>& expand(const Monomial& mono) {
    auto it = nf_cache_.find(mono);
    if (it != nf_cache_.end()) return it->second;
    std::vector<std::pair<Monomial, typename F::Elem>> result;
    if (is_standard(mono)) {
      result.emplace_back(mono, field_.one());
    } else {
      Polynomial<F> p =
          make_poly(field_, ctx_.order, std::vector<Term<F>>{{mono, field_.one()}});
      auto nf = normal_form(field_, ctx_.order, p, gb_.polys);
      for (const auto& t : nf.terms) result.emplace_back(t.mono, t.coeff);
    }
    return nf_cache_.emplace(mono, std::move(result)).first->second;
  }

  // Betti numbers on the strip j - i = s: returns map i -> beta_{i, i+s}.
  std::map<int, long> strip_betti(int s);

  // Full table for j <= degree_cap.
  BettiTable full_table(int degree_cap);

 private:
  bool is_bihomogeneous(const Polynomial<F>& p) const {
    if (p.terms.empty()) return true;
    auto md = multideg_raw(p.terms.front().mono);
    for (const auto& t : p.terms)
      if (multideg_raw(t.mono) != md) return false;
    return true;
  }

  std::vector<int> multideg_raw(const Monomial& u) const {
    std::vector<int> md(static_cast<std::size_t>(ctx_.m + ctx_.n), 0);
    for (int idx = 0; idx < ctx_.num_vars(); ++idx) {
      auto [i, j] = ctx_.var_grid(idx);
      md[i - 1] += u[idx];
      md[ctx_.m + j - 1] += u[idx];
    }
    return md;
  }

  void enumerate(Monomial& cur, int var, int remaining, std::vector<Monomial>& out) const {
    if (remaining == 0) {
      if (is_standard(cur)) out.push_back(cur);
      return;
    }
    if (var >= ctx_.num_vars()) return;
    // prune: if already non-standard, no extension is standard
    if (!is_standard(cur)) return;
    for (int e = remaining; e >= 0; --e) {
      cur[var] = static_cast<std::uint8_t>(e);
      enumerate(cur, var + 1, remaining - e, out);
    }
    cur[var] = 0;
  }

  struct Block {
    // basis split by Koszul stage p: elements (subset mask, standard monomial)
    std::map<int, std::vector<std::pair<std::uint64_t, Monomial>>> stages;
  };

  long block_homology(const F& field, Block& blk, int p);

  const F& field_;
  const RingContext& ctx_;
  const GroebnerBasis<F>& gb_;
  std::vector<Monomial> leads_;
  bool bigraded_ = false;
  std::unordered_map<Monomial, std::vector<std::pair<Monomial, typename F::Elem>>, MonoHash>
      nf_cache_;
};

template <class F>
long KoszulEngine<F>::block_homology(const F& field, Block& blk, int p) {
  auto stage = [&](int q) -> std::vector<std::pair<std::uint64_t, Monomial>>& {
    static std::vector<std::pair<std::uint64_t, Monomial>> empty;
    auto it = blk.stages.find(q);
    return it == blk.stages.end() ? empty : it->second;
  };
  auto& cp = stage(p);
  if (cp.empty()) return 0;

  auto index_of = [&](const std::vector<std::pair<std::uint64_t, Monomial>>& v) {
    std::unordered_map<std::uint64_t, std::unordered_map<Monomial, std::size_t, MonoHash>> idx;
    for (std::size_t i = 0; i < v.size(); ++i) idx[v[i].first][v[i].second] = i;
    return idx;
  };

  // rank of d_q : C_q -> C_{q-1}
  auto rank_of = [&](int q) -> std::size_t {
    auto& domain = stage(q);
    auto& codomain = stage(q - 1);
    if (domain.empty() || codomain.empty()) return 0;
    auto idx = index_of(codomain);
    SparseRank<F> ranker(field, codomain.size());
    for (const auto& [tmask, u] : domain) {
      std::vector<std::pair<std::size_t, typename F::Elem>> col;
      int pos = 0;
      for (std::uint64_t rest = tmask; rest; rest &= rest - 1, ++pos) {
        int t = __builtin_ctzll(rest);
        std::uint64_t sub = tmask & ~(1ull << t);
        Monomial xu = u;
        ++xu[t];
        auto sign_is_plus = (pos % 2 == 0);
        for (const auto& [mono, coeff] : expand(xu)) {
          auto sub_it = idx.find(sub);
          if (sub_it == idx.end()) continue;
          auto m_it = sub_it->second.find(mono);
          if (m_it == sub_it->second.end()) continue;  // outside the block slice
          auto c = sign_is_plus ? coeff : field.neg(coeff);
          col.emplace_back(m_it->second, c);
        }
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // merge duplicate rows
      std::vector<std::pair<std::size_t, typename F::Elem>> merged;
      for (auto& [r, c] : col) {
        if (!merged.empty() && merged.back().first == r) {
          merged.back().second = field.add(merged.back().second, c);
          if (field.is_zero(merged.back().second)) merged.pop_back();
        } else {
          merged.emplace_back(r, c);
        }
      }
      ranker.add_column(std::move(merged));
    }
    return ranker.rank();
  };

  long h = static_cast<long>(cp.size());
  h -= static_cast<long>(rank_of(p));
  h -= static_cast<long>(rank_of(p + 1));
  return h;
}

template <class F>
std::map<int, long> KoszulEngine<F>::strip_betti(int s) {
  int nv = ctx_.num_vars();
  // Standard monomials of degree s-1, s, s+1.
  std::vector<std::vector<Monomial>> monos;
  for (int d = s - 1; d <= s + 1; ++d)
    monos.push_back(d < 0 ? std::vector<Monomial>{} : standard_monomials_of_degree(d));

  std::unordered_map<std::vector<int>, Block, VecHash> blocks;
  std::vector<std::vector<int>> subset_mdeg(1ull << nv);
  for (std::uint64_t t = 0; t < (1ull << nv); ++t) {
    Monomial tm(static_cast<std::size_t>(nv), 0);
    for (std::uint64_t rest = t; rest; rest &= rest - 1) tm[__builtin_ctzll(rest)] = 1;
    subset_mdeg[t] = multidegree(tm);
  }
  auto add_pair = [&](std::uint64_t t, const Monomial& u, const std::vector<int>& umd) {
    std::vector<int> key = subset_mdeg[t];
    for (std::size_t i = 0; i < key.size(); ++i) key[i] += umd[i];
    blocks[key].stages[__builtin_popcountll(t)].emplace_back(t, u);
  };
  for (const auto& bucket : monos)
    for (const auto& u : bucket) {
      auto umd = multidegree(u);
      for (std::uint64_t t = 0; t < (1ull << nv); ++t) add_pair(t, u, umd);
    }

  std::map<int, long> strip;
  for (auto& [key, blk] : blocks) {
    int j = 0;
    if (bigraded_) {
      for (int i = 0; i < ctx_.m; ++i) j += key[static_cast<std::size_t>(i)];
    } else {
      j = key[0];
    }
    int p = j - s;
    if (p < 0 || p > nv) continue;
    // Only elements with the right homological stage exist in this strip.
    long h = block_homology(field_, blk, p);
    if (h != 0) strip[p] += h;
  }
  return strip;
}

template <class F>
BettiTable KoszulEngine<F>::full_table(int degree_cap) {
  int nv = ctx_.num_vars();
  std::vector<std::vector<Monomial>> monos_by_degree;
  std::vector<std::vector<std::vector<int>>> mdeg_by_degree;
  for (int d = 0; d <= degree_cap; ++d) {
    monos_by_degree.push_back(standard_monomials_of_degree(d));
    std::vector<std::vector<int>> mds;
    for (const auto& u : monos_by_degree.back()) mds.push_back(multidegree(u));
    mdeg_by_degree.push_back(std::move(mds));
  }
  std::unordered_map<std::vector<int>, Block, VecHash> blocks;
  for (std::uint64_t t = 0; t < (1ull << nv); ++t) {
    int p = __builtin_popcountll(t);
    if (p > degree_cap) continue;
    Monomial tm(static_cast<std::size_t>(nv), 0);
    for (std::uint64_t rest = t; rest; rest &= rest - 1) tm[__builtin_ctzll(rest)] = 1;
    auto tmd = multidegree(tm);
    for (int d = 0; d + p <= degree_cap; ++d) {
      for (std::size_t ui = 0; ui < monos_by_degree[d].size(); ++ui) {
        const auto& u = monos_by_degree[d][ui];
        const auto& umd = mdeg_by_degree[d][ui];
        std::vector<int> key = tmd;
        for (std::size_t i = 0; i < key.size(); ++i) key[i] += umd[i];
        blocks[key].stages[p].emplace_back(t, u);
      }
    }
  }
  BettiTable table;
  table.partial = true;
  table.computed_through_degree = degree_cap;
  for (auto& [key, blk] : blocks) {
    int j = 0;
    if (bigraded_) {
      for (int i = 0; i < ctx_.m; ++i) j += key[static_cast<std::size_t>(i)];
    } else {
      j = key[0];
    }
    for (auto& [p, elems] : blk.stages) {
      (void)elems;
      long h = block_homology(field_, blk, p);
      if (h != 0) table.add(p, j, h);
    }
  }
  return table;
}

}  // namespace detail

template <class F>
BettiTable koszul_betti(const F& field, const RingContext& ctx, const GroebnerBasis<F>& gb,
                        int degree_cap) {
  if (ctx.num_vars() > 20) throw CapacityError("koszul variable cap exceeded");
  detail::KoszulEngine<F> engine(field, ctx, gb);
  return engine.full_table(degree_cap);
}

// ---------------------------------------------------------------------------
// The regularity front end

enum class RegStrategy { kAuto, kHochster, kKoszul, kClosedForm };

struct RegularityResult {
  int reg = 0;
  std::string strategy;
  std::string field;
  std::string order = "degrevlex, row-major";
  long elapsed_ms = 0;
  bool initial_squarefree = false;
  std::vector<std::string> notes;
  BettiTable betti;  // of S/in(J) for hochster, strip data absent for closed form
};

// Closed form for a disjoint union of complete graphs (after stripping
// isolated vertices): sum of min{m-1, n_i - 1}.
inline std::optional<int> closed_form_regularity(int m, const Graph& g) {
  auto stripped = strip_isolated(g).graph;
  auto cls = classify(stripped);
  if (!cls.is_disjoint_union_of_completes) return std::nullopt;
  int r = 0;
  for (int sz : cls.component_complete_sizes) r += std::min(m - 1, sz - 1);
  return r;
}

template <class F>
RegularityResult regularity_impl(const F& field, int m, const Graph& g, RegStrategy strategy,
                                 std::int64_t prime, int hochster_cap = 20) {
  auto start = std::chrono::steady_clock::now();
  RegularityResult res;
  res.field = prime == 0 ? "QQ" : ("GF(" + std::to_string(prime) + ")");

  auto finish = [&](RegularityResult& r) -> RegularityResult& {
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  };

  if (strategy == RegStrategy::kAuto || strategy == RegStrategy::kClosedForm) {
    auto cf = closed_form_regularity(m, g);
    if (cf) {
      res.reg = *cf;
      res.strategy = "closed-form";
      return finish(res);
    }
    if (strategy == RegStrategy::kClosedForm)
      throw std::invalid_argument("closed form requires a disjoint union of complete graphs");
  }

  RingContext ctx = make_ring(m, g.n(), prime);
  Ideal<F> ideal = gbei_ideal(field, ctx, g);
  auto gb = buchberger(field, ideal);
  auto in_ideal = initial_ideal(gb);
  res.initial_squarefree = in_ideal.squarefree;

  // Upper bound on reg(S/J): reg(S/in J), computed by Hochster on the
  // (polarized, if necessary) initial ideal.
  int in_reg;
  if (in_ideal.squarefree) {
    auto complex = stanley_reisner(ctx, in_ideal);
    res.betti = hochster_betti(field, complex, hochster_cap);
    in_reg = res.betti.regularity();
  } else {
    res.notes.push_back("initial ideal not squarefree; regularity via polarization + Koszul");
    int pol_vars = 0;
    auto pol = polarize(in_ideal.gens, ctx.num_vars(), &pol_vars);
    auto complex = stanley_reisner(pol_vars, pol);
    res.betti = hochster_betti(field, complex, hochster_cap);
    in_reg = res.betti.regularity();
  }

  bool need_koszul = strategy == RegStrategy::kKoszul || !in_ideal.squarefree;
  if (!need_koszul) {
    // reg(S/J) = reg(S/in J) when in(J) is squarefree (checked at runtime).
    res.reg = in_reg;
    res.strategy = "hochster";
    res.notes.push_back("squarefree initial ideal; reg(S/J) = reg(S/in J)");
    return finish(res);
  }

  // Koszul strips downward from the certified upper bound reg(S/in J).
  detail::KoszulEngine<F> engine(field, ctx, gb);
  res.strategy = "koszul";
  for (int s = in_reg; s >= 0; --s) {
    auto strip = engine.strip_betti(s);
    bool nonzero = false;
    for (auto [i, b] : strip)
      if (b != 0) nonzero = true;
    if (nonzero || s == 0) {
      res.reg = s;
      res.notes.push_back("strip " + std::to_string(s) + " nonzero; upper bound reg(S/in J) = " +
                          std::to_string(in_reg));
      return finish(res);
    }
  }
  return finish(res);
}

inline RegularityResult regularity(int m, const Graph& g,
                                   RegStrategy strategy = RegStrategy::kAuto,
                                   std::int64_t prime = 32003, int hochster_cap = 20) {
  if (prime == 0) {
    RationalField field;
    return regularity_impl(field, m, g, strategy, 0, hochster_cap);
  }
  PrimeField field(prime);
  return regularity_impl(field, m, g, strategy, prime, hochster_cap);
}

}  // namespace gbei
