#pragma once

// Labeled simple graphs on at most 64 vertices, one machine word per
// adjacency row, plus the triangle/clique/maximality primitives shared by the
// rest of the library.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtf {

using Word = std::uint64_t;
using EdgeIndex = std::uint32_t;

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size cap was exceeded. Guards are hard errors, never silent truncation.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

inline constexpr Word bit(int v) { return Word{1} << v; }

// Bits 0..n-1 set.
inline constexpr Word low_mask(int n) { return n >= 64 ? ~Word{0} : bit(n) - 1; }

// Bits strictly above v.
inline constexpr Word above(int v) { return v >= 63 ? Word{0} : ~Word{0} << (v + 1); }

inline int popcount(Word w) { return std::popcount(w); }

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge (u,v) with u<v has index u*n + v in a host graph of order n.
inline constexpr EdgeIndex edge_index(int n, int u, int v) {
  return u < v ? static_cast<EdgeIndex>(u * n + v) : static_cast<EdgeIndex>(v * n + u);
}

inline constexpr Edge decode_edge(int n, EdgeIndex index) {
  return Edge{static_cast<int>(index) / n, static_cast<int>(index) % n};
}

// "u-v" with u<v.
std::string format_edge(Edge e);
Edge parse_edge(std::string_view text);

class EdgeSet;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Validates symmetry, loop-freeness and out-of-range bits.
  static Graph from_rows(int n, std::span<const Word> rows);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  Word vertex_mask() const { return low_mask(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  Word row(int u) const { return rows_[u]; }
  std::span<const Word> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  int degree(int u) const { return popcount(rows_[u]); }
  std::size_t edge_count() const;

  // Edges in ascending edge-index order.
  std::vector<Edge> edges() const;
  EdgeSet edge_set() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  // Graph minus the edges of `s` (edges absent from the graph are ignored).
  Graph minus(const EdgeSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<Word, kMaxVertices> rows_{};
};

// Canonical order on graphs: first by order, then by the upper-triangle bit
// pattern read as a binary number whose least significant bit is pair (0,1)
// and whose most significant bit is pair (n-2,n-1).
std::strong_ordering compare_patterns(const Graph& a, const Graph& b);
inline bool pattern_less(const Graph& a, const Graph& b) { return compare_patterns(a, b) < 0; }

// A set of vertex pairs of one host graph, addressed by canonical edge index.
class EdgeSet {
 public:
  explicit EdgeSet(int host_n = 0);
  EdgeSet(int host_n, std::span<const Edge> edges);
  EdgeSet(int host_n, std::initializer_list<Edge> edges)
      : EdgeSet(host_n, std::span<const Edge>(edges.begin(), edges.size())) {}
  static EdgeSet from_indices(int host_n, std::span<const EdgeIndex> indices);

  int host_order() const { return n_; }
  bool contains(int u, int v) const { return u != v && ((rows_[u] >> v) & 1U); }
  bool contains(Edge e) const { return contains(e.u, e.v); }
  bool contains_index(EdgeIndex index) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  void insert(int u, int v);
  void insert(Edge e) { insert(e.u, e.v); }
  void erase(int u, int v);

  EdgeSet united(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;
  EdgeSet intersected(const EdgeSet& other) const;
  bool is_subset_of(const EdgeSet& other) const;

  std::vector<EdgeIndex> indices() const;
  std::vector<Edge> edges() const;

  // Symmetric row of the spanned graph.
  Word row(int u) const { return rows_[u]; }
  Graph as_graph() const;

  // Calls fn(subset) for every subset, in increasing order of the subset's
  // bit pattern over the members listed by edges().
  template <class Fn>
  void for_each_subset(Fn&& fn) const {
    const auto members = edges();
    if (members.size() >= 63) throw GuardViolation("subset enumeration over more than 62 edges");
    const std::uint64_t total = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      EdgeSet subset(n_);
      for (std::size_t i = 0; i < members.size(); ++i)
        if ((mask >> i) & 1U) subset.insert(members[i]);
      fn(subset);
    }
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<Word, kMaxVertices> rows_{};
};

std::uint64_t count_triangles(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Triangle-free and every non-adjacent pair has a common neighbor.
bool is_maximal_triangle_free(const Graph& g);

// Requires 1 <= k <= g.order().
bool has_clique(const Graph& g, int k);

// Removes, one at a time, an edge lying in the most remaining triangles
// (ties: smallest edge index) until no triangle is left.
EdgeSet greedy_triangle_removal(const Graph& g);

inline constexpr int kMaxDensityScanOrder = 7;

// Exact minimum triangle count over all labeled graphs on n vertices with m
// edges. Exhaustive, so n is capped at 7.
std::uint64_t min_triangles_at_density(int n, int m);

}  // namespace mtf
