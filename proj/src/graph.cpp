#include "mtf/graph.hpp"

#include <charconv>

namespace mtf {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw GuardViolation("unsupported graph order " + std::to_string(n) + " (limit 64)");
}

}  // namespace

std::string format_edge(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Edge parse_edge(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw Error("malformed edge '" + std::string(text) + "'");
  Edge e;
  const auto a = std::from_chars(text.data(), text.data() + dash, e.u);
  const auto b = std::from_chars(text.data() + dash + 1, text.data() + text.size(), e.v);
  if (a.ec != std::errc{} || a.ptr != text.data() + dash || b.ec != std::errc{} ||
      b.ptr != text.data() + text.size() || e.u < 0 || e.v < 0 || e.u == e.v)
    throw Error("malformed edge '" + std::string(text) + "'");
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::from_rows(int n, std::span<const Word> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n))
    throw Error("row count does not match graph order");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u] & ~low_mask(n)) throw Error("adjacency bit beyond vertex range in row " + std::to_string(u));
    if ((rows[u] >> u) & 1U) throw Error("self-loop at vertex " + std::to_string(u));
    g.rows_[u] = rows[u];
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw Error("asymmetric adjacency rows");
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.rows_[u] = low_mask(n) & ~bit(u);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int u = 0; u < n_; ++u) twice += popcount(rows_[u]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Word w = rows_[u] & above(u); w; w &= w - 1) out.push_back({u, std::countr_zero(w)});
  return out;
}

EdgeSet Graph::edge_set() const {
  const auto es = edges();
  return EdgeSet(n_, es);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw Error("invalid vertex pair " + std::to_string(u) + "," + std::to_string(v) + " for order " +
                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::minus(const EdgeSet& s) const {
  if (s.host_order() != n_) throw Error("edge set host order does not match graph");
  Graph g = *this;
  for (int u = 0; u < n_; ++u) g.rows_[u] &= ~s.row(u);
  return g;
}

std::strong_ordering compare_patterns(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() <=> b.order();
  for (int u = a.order() - 1; u >= 0; --u) {
    const Word x = a.row(u) & above(u);
    const Word y = b.row(u) & above(u);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet::EdgeSet(int host_n) : n_(host_n) { check_order(host_n); }

EdgeSet::EdgeSet(int host_n, std::span<const Edge> edges) : EdgeSet(host_n) {
  for (const Edge& e : edges) insert(e.u, e.v);
}

EdgeSet EdgeSet::from_indices(int host_n, std::span<const EdgeIndex> indices) {
  EdgeSet s(host_n);
  for (EdgeIndex i : indices) {
    const Edge e = decode_edge(host_n, i);
    if (host_n == 0 || e.u >= e.v || e.v >= host_n)
      throw Error("edge index " + std::to_string(i) + " does not decode to a pair u<v");
    s.insert(e);
  }
  return s;
}

void EdgeSet::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw Error("invalid vertex pair " + std::to_string(u) + "," + std::to_string(v) + " for order " +
                std::to_string(n_));
}

bool EdgeSet::contains_index(EdgeIndex index) const {
  if (n_ == 0) return false;
  const Edge e = decode_edge(n_, index);
  return e.u < e.v && e.v < n_ && contains(e);
}

std::size_t EdgeSet::size() const {
  std::size_t twice = 0;
  for (int u = 0; u < n_; ++u) twice += popcount(rows_[u]);
  return twice / 2;
}

void EdgeSet::insert(int u, int v) {
  check_pair(u, v);
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void EdgeSet::erase(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  if (other.n_ != n_) throw Error("edge sets over different hosts");
  EdgeSet s = *this;
  for (int u = 0; u < n_; ++u) s.rows_[u] |= other.rows_[u];
  return s;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  if (other.n_ != n_) throw Error("edge sets over different hosts");
  EdgeSet s = *this;
  for (int u = 0; u < n_; ++u) s.rows_[u] &= ~other.rows_[u];
  return s;
}

EdgeSet EdgeSet::intersected(const EdgeSet& other) const {
  if (other.n_ != n_) throw Error("edge sets over different hosts");
  EdgeSet s = *this;
  for (int u = 0; u < n_; ++u) s.rows_[u] &= other.rows_[u];
  return s;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (other.n_ != n_) return false;
  for (int u = 0; u < n_; ++u)
    if (rows_[u] & ~other.rows_[u]) return false;
  return true;
}

std::vector<EdgeIndex> EdgeSet::indices() const {
  std::vector<EdgeIndex> out;
  for (const Edge& e : edges()) out.push_back(edge_index(n_, e.u, e.v));
  return out;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Word w = rows_[u] & above(u); w; w &= w - 1) out.push_back({u, std::countr_zero(w)});
  return out;
}

Graph EdgeSet::as_graph() const {
  return Graph::from_rows(n_, std::span<const Word>(rows_.data(), static_cast<std::size_t>(n_)));
}

// ---------------------------------------------------------------------------
// Triangle primitives

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (int u = 0; u < g.order(); ++u)
    for (Word w = g.row(u) & above(u); w; w &= w - 1) {
      const int v = std::countr_zero(w);
      total += popcount(g.row(u) & g.row(v) & above(v));
    }
  return total;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (Word w = g.row(u) & above(u); w; w &= w - 1) {
      const int v = std::countr_zero(w);
      const Word common = g.row(u) & g.row(v) & above(v);
      if (common) return std::array<int, 3>{u, v, std::countr_zero(common)};
    }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (Word w = g.row(u) & above(u); w; w &= w - 1)
      if (g.row(u) & g.row(std::countr_zero(w))) return false;
  return true;
}

bool is_maximal_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) return false;
  const Word all = g.vertex_mask();
  for (int u = 0; u < g.order(); ++u)
    for (Word w = all & above(u) & ~g.row(u); w; w &= w - 1)
      if (!(g.row(u) & g.row(std::countr_zero(w)))) return false;
  return true;
}

namespace {

bool extend_clique(const Graph& g, Word candidates, int needed) {
  if (needed == 0) return true;
  while (popcount(candidates) >= needed) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (extend_clique(g, candidates & g.row(v), needed - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_clique(const Graph& g, int k) {
  if (k < 1 || k > g.order())
    throw std::invalid_argument("clique size must lie in [1, n]");
  return extend_clique(g, g.vertex_mask(), k);
}

EdgeSet greedy_triangle_removal(const Graph& g) {
  Graph rest = g;
  EdgeSet removed(g.order());
  for (;;) {
    int best = 0;
    Edge pick{};
    // Row-major scan visits edges in increasing index, so strict '>' keeps
    // the smallest index among ties.
    for (int u = 0; u < rest.order(); ++u)
      for (Word w = rest.row(u) & above(u); w; w &= w - 1) {
        const int v = std::countr_zero(w);
        const int through = popcount(rest.row(u) & rest.row(v));
        if (through > best) {
          best = through;
          pick = {u, v};
        }
      }
    if (best == 0) return removed;
    rest.remove_edge(pick.u, pick.v);
    removed.insert(pick);
  }
}

std::uint64_t min_triangles_at_density(int n, int m) {
  if (n > kMaxDensityScanOrder)
    throw GuardViolation("min_triangles_at_density is capped at n=7, got n=" + std::to_string(n));
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  const int pairs = n * (n - 1) / 2;
  if (m < 0 || m > pairs) throw std::invalid_argument("edge count outside [0, C(n,2)]");

  std::vector<Edge> order;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) order.push_back({u, v});

  if (m == 0) return 0;
  // Gosper's hack over all pair masks with exactly m bits.
  std::uint64_t best = ~std::uint64_t{0};
  const std::uint64_t limit = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = (std::uint64_t{1} << m) - 1; mask < limit;) {
    std::array<Word, kMaxDensityScanOrder> rows{};
    for (std::uint64_t w = mask; w; w &= w - 1) {
      const Edge& e = order[std::countr_zero(w)];
      rows[e.u] |= bit(e.v);
      rows[e.v] |= bit(e.u);
    }
    std::uint64_t t = 0;
    for (int u = 0; u < n; ++u)
      for (Word w = rows[u] & above(u); w; w &= w - 1) {
        const int v = std::countr_zero(w);
        t += popcount(rows[u] & rows[v] & above(v));
      }
    if (t < best) {
      best = t;
      if (best == 0) break;
    }
    const std::uint64_t c = mask & -mask;
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return best;
}

}  // namespace mtf
