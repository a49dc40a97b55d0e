#pragma once

// Simple undirected graphs on 1..n with the combinatorial primitives used
// throughout: components, cut vertices, cutsets, free/internal vertices,
// neighbor completion, maximal cliques and block-graph classification.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbei {

using VertexSet = std::vector<int>;  // sorted, 1-based vertex ids

constexpr int kMaxVertices = 64;  // adjacency kept in 64-bit masks

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {}) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    adj_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) add_edge_checked(u, v);
    canonicalize();
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> (v - 1)) & 1u; }

  // Neighbor mask, bit v-1 set iff v adjacent to u.
  std::uint64_t neighbor_mask(int u) const { return adj_[u]; }

  VertexSet neighbors(int u) const {
    VertexSet out;
    for (int v = 1; v <= n_; ++v)
      if (adjacent(u, v)) out.push_back(v);
    return out;
  }

  int degree(int u) const { return __builtin_popcountll(adj_[u]); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  std::uint64_t full_mask() const { return n_ == 64 ? ~0ull : ((1ull << n_) - 1); }

  std::string edge_list_string() const {
    std::string s = std::to_string(n_);
    for (auto [u, v] : edges_) s += "\n" + std::to_string(u) + " " + std::to_string(v);
    return s;
  }

 private:
  void add_edge_checked(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u] |= 1ull << (v - 1);
    adj_[v] |= 1ull << (u - 1);
  }

  void canonicalize() {
    edges_.clear();
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (adjacent(u, v)) edges_.emplace_back(u, v);
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;  // adj_[0] unused
};

namespace detail {

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    int v = __builtin_ctzll(mask) + 1;
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

inline std::uint64_t set_to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= 1ull << (v - 1);
  return m;
}

// Connected components of the induced subgraph on `verts`, as masks.
inline std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t verts) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = verts;
  while (left) {
    int s = __builtin_ctzll(left) + 1;
    std::uint64_t comp = 1ull << (s - 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      int u = __builtin_ctzll(frontier) + 1;
      frontier &= frontier - 1;
      std::uint64_t nb = g.neighbor_mask(u) & verts & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

inline int component_count(const Graph& g, std::uint64_t verts) {
  return static_cast<int>(component_masks(g, verts).size());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

enum class GraphFormat { kGraph6, kEdgeList };

inline Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return std::stoi(text.substr(start, pos - start));
  };
  int n = read_int();
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", 0);
  std::vector<std::pair<int, int>> edges;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    std::size_t at = pos;
    int u = read_int();
    int v = read_int();
    if (u == v) throw ParseError("self-loop", at);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("endpoint out of range", at);
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

inline Graph parse_graph6(const std::string& text) {
  std::size_t pos = 0;
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) {
    s = s.substr(10);
    pos += 10;
  }
  if (s.empty()) throw ParseError("empty graph6 string", pos);
  auto val = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos + i);
    return c - 63;
  };
  std::size_t idx = 0;
  long long n;
  if (s[0] != '~') {
    n = val(0);
    idx = 1;
  } else if (s.size() >= 4 && s[1] != '~') {
    n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
    idx = 4;
  } else if (s.size() >= 8) {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    idx = 8;
  } else {
    throw ParseError("truncated graph6 header", pos);
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", pos);
  long long bits_needed = n * (n - 1) / 2;
  long long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(idx) != bytes_needed)
    throw ParseError("graph6 body length mismatch", pos + s.size());
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u, ++bit) {
      int b = (val(idx + bit / 6) >> (5 - bit % 6)) & 1;
      if (b) edges.emplace_back(u, v);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_graph(const std::string& text, GraphFormat fmt) {
  return fmt == GraphFormat::kEdgeList ? parse_edge_list(text) : parse_graph6(text);
}

inline std::string to_graph6(const Graph& g) {
  std::string s;
  int n = g.n();
  if (n <= 62) {
    s.push_back(static_cast<char>(n + 63));
  } else {
    s.push_back('~');
    s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    s.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 2; v <= n; ++v) {
    for (int u = 1; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return s;
}

// ---------------------------------------------------------------------------
// Basic operations

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto m : detail::component_masks(g, g.full_mask())) out.push_back(detail::mask_to_set(m));
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.n() <= 1 || detail::component_count(g, g.full_mask()) == 1;
}

// Cut vertices of g restricted to the induced subgraph on `verts`.
inline bool is_cut_vertex_in(const Graph& g, std::uint64_t verts, int v) {
  std::uint64_t bit = 1ull << (v - 1);
  if (!(verts & bit)) return false;
  return detail::component_count(g, verts & ~bit) > detail::component_count(g, verts);
}

inline VertexSet cut_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.n(); ++v)
    if (is_cut_vertex_in(g, g.full_mask(), v)) out.push_back(v);
  return out;
}

// All cutsets: T such that every i in T is a cut vertex of G - (T \ {i}).
// Sorted by (size, lexicographic). The empty set is always present.
inline std::vector<VertexSet> cutsets(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> out;
  std::uint64_t full = g.full_mask();
  for (std::uint64_t t = 0; t < (1ull << n); ++t) {
    bool ok = true;
    for (std::uint64_t rest = t; rest && ok; rest &= rest - 1) {
      int i = __builtin_ctzll(rest) + 1;
      std::uint64_t kept = full & ~(t & ~(1ull << (i - 1)));
      ok = is_cut_vertex_in(g, kept, i);
    }
    if (ok) out.push_back(detail::mask_to_set(t));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// G_v: all pairs of neighbors of v joined; v becomes free.
inline Graph neighbor_completion(const Graph& g, int v) {
  if (v < 1 || v > g.n()) throw std::invalid_argument("vertex out of range");
  auto edges = g.edges();
  VertexSet nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      if (!g.adjacent(nb[a], nb[b])) edges.emplace_back(nb[a], nb[b]);
  return Graph(g.n(), std::move(edges));
}

struct DeletionResult {
  Graph graph;
  std::vector<int> old_label;  // old_label[new - 1] = original vertex id
};

// Induced subgraph on V(G) \ T, relabeled 1..n-|T| order-preservingly.
inline DeletionResult delete_vertices(const Graph& g, const VertexSet& t) {
  std::uint64_t tmask = detail::set_to_mask(t);
  std::vector<int> old_label;
  std::vector<int> new_label(g.n() + 1, 0);
  for (int v = 1; v <= g.n(); ++v) {
    if (tmask & (1ull << (v - 1))) continue;
    old_label.push_back(v);
    new_label[v] = static_cast<int>(old_label.size());
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_label[u] && new_label[v]) edges.emplace_back(new_label[u], new_label[v]);
  return {Graph(static_cast<int>(old_label.size()), std::move(edges)), std::move(old_label)};
}

inline Graph delete_vertex(const Graph& g, int v) { return delete_vertices(g, {v}).graph; }

inline bool is_free_vertex(const Graph& g, int v) {
  VertexSet nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      if (!g.adjacent(nb[a], nb[b])) return false;
  return true;
}

struct FreeVertexPartition {
  VertexSet free;
  VertexSet internal;  // |internal| = iv(G)
};

inline FreeVertexPartition free_vertices(const Graph& g) {
  FreeVertexPartition p;
  for (int v = 1; v <= g.n(); ++v)
    (is_free_vertex(g, v) ? p.free : p.internal).push_back(v);
  return p;
}

inline int internal_vertex_count(const Graph& g) {
  int iv = 0;
  for (int v = 1; v <= g.n(); ++v)
    if (!is_free_vertex(g, v)) ++iv;
  return iv;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

// G with isolated vertices stripped (relabeled).
inline DeletionResult strip_isolated(const Graph& g) {
  return delete_vertices(g, isolated_vertices(g));
}

// ---------------------------------------------------------------------------
// Maximal cliques (Bron-Kerbosch with pivoting), deterministic output order.

namespace detail {

inline void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P|X with the most neighbors in P, lowest index on ties.
  int pivot = -1, best = -1;
  for (std::uint64_t cand = p | x; cand; cand &= cand - 1) {
    int u = __builtin_ctzll(cand) + 1;
    int cnt = __builtin_popcountll(g.neighbor_mask(u) & p);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  std::uint64_t ext = p & ~g.neighbor_mask(pivot);
  while (ext) {
    int v = __builtin_ctzll(ext) + 1;
    std::uint64_t bit = 1ull << (v - 1);
    ext &= ext - 1;
    bron_kerbosch(g, r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace detail

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<std::uint64_t> masks;
  if (g.n() > 0) detail::bron_kerbosch(g, 0, g.full_mask(), 0, masks);
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(detail::mask_to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline int clique_number_c(const Graph& g) { return static_cast<int>(maximal_cliques(g).size()); }

// ---------------------------------------------------------------------------
// Classification (disjoint unions of completes, block graphs, class B_m)

struct GraphClassification {
  bool is_disjoint_union_of_completes = false;
  std::vector<int> component_complete_sizes;  // sorted, only meaningful when flag set
  bool is_block_graph = false;
  int bm_max = 0;  // largest m with G in B_m; 0 when G not in the class B
  VertexSet cut_vertices;
  VertexSet isolated;  // Is(G)
};

namespace detail {

inline bool induces_complete(const Graph& g, std::uint64_t mask) {
  auto vs = mask_to_set(mask);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

// Biconnected components (blocks) as vertex masks, via Hopcroft-Tarjan.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::uint64_t> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph), disc(graph.n() + 1, 0), low(graph.n() + 1, 0) {}

  void dfs(int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (int v = 1; v <= g.n(); ++v) {
      if (!g.adjacent(u, v)) continue;
      if (!disc[v]) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::uint64_t blk = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            blk |= (1ull << (a - 1)) | (1ull << (b - 1));
            if (a == u && b == v) break;
          }
          blocks.push_back(blk);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }

  std::vector<std::uint64_t> run() {
    for (int s = 1; s <= g.n(); ++s)
      if (!disc[s] && g.degree(s) > 0) dfs(s, 0);
    return blocks;
  }
};

inline std::vector<std::uint64_t> block_masks(const Graph& g) { return BlockFinder(g).run(); }

}  // namespace detail

// Block graph: every block is a clique.
inline bool is_block_graph(const Graph& g) {
  for (auto blk : detail::block_masks(g))
    if (!detail::induces_complete(g, blk)) return false;
  return true;
}

inline GraphClassification classify(const Graph& g) {
  GraphClassification cls;
  cls.cut_vertices = cut_vertices(g);
  cls.isolated = isolated_vertices(g);

  auto comps = detail::component_masks(g, g.full_mask());
  cls.is_disjoint_union_of_completes = true;
  for (auto c : comps) {
    if (!detail::induces_complete(g, c)) {
      cls.is_disjoint_union_of_completes = false;
      break;
    }
  }
  if (cls.is_disjoint_union_of_completes) {
    for (auto c : comps) cls.component_complete_sizes.push_back(__builtin_popcountll(c));
    std::sort(cls.component_complete_sizes.begin(), cls.component_complete_sizes.end());
  }

  cls.is_block_graph = is_block_graph(g);

  // B: block graphs where every vertex lies in at most two maximal cliques.
  // B_m: additionally every maximal clique has >= m + (its cut vertices) vertices.
  if (cls.is_block_graph && g.n() > 0) {
    auto cliques = maximal_cliques(g);
    std::vector<int> clique_count(g.n() + 1, 0);
    for (const auto& c : cliques)
      for (int v : c) ++clique_count[v];
    bool in_B = true;
    for (int v = 1; v <= g.n(); ++v)
      if (clique_count[v] > 2) in_B = false;
    if (in_B) {
      std::uint64_t cuts = detail::set_to_mask(cls.cut_vertices);
      int bm = kMaxVertices;
      for (const auto& c : cliques) {
        int r = __builtin_popcountll(detail::set_to_mask(c) & cuts);
        bm = std::min(bm, static_cast<int>(c.size()) - r);
      }
      cls.bm_max = std::max(bm, 0);
    }
  }
  return cls;
}

// ---------------------------------------------------------------------------
// Small named graphs used as fixtures.

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

// Disjoint union, second graph's vertices shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), std::move(e));
}

// Block graph of Figure 1: K_4 on {1..4}, K_5 on {4..8}, K_4 on {8..11}.
inline Graph figure1_graph() {
  std::vector<std::pair<int, int>> e;
  auto add_clique = [&](std::vector<int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
  };
  add_clique({1, 2, 3, 4});
  add_clique({4, 5, 6, 7, 8});
  add_clique({8, 9, 10, 11});
  return Graph(11, std::move(e));
}

// Block graph of Figure 2: K_3 on {1,2,3}, K_4 on {3,4,5,6}.
inline Graph figure2_graph() {
  std::vector<std::pair<int, int>> e;
  auto add_clique = [&](std::vector<int> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) e.emplace_back(vs[i], vs[j]);
  };
  add_clique({1, 2, 3});
  add_clique({3, 4, 5, 6});
  return Graph(6, std::move(e));
}

}  // namespace gbei
