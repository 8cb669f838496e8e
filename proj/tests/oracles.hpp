#pragma once

// Brute-force references for the unit tests. These read adjacency only
// through Graph::adjacent and use plain nested loops, so they share no code
// path with the word-parallel implementations they check.

#include <cstdint>
#include <random>
#include <vector>

#include "mtf/graph.hpp"

namespace mtf::oracle {

inline std::uint64_t triangles(const Graph& g) {
  std::uint64_t t = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++t;
  return t;
}

inline bool maximal_triangle_free(const Graph& g) {
  if (triangles(g) != 0) return false;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      bool common = false;
      for (int w = 0; w < n; ++w) common = common || (g.adjacent(a, w) && g.adjacent(b, w));
      if (!common) return false;
    }
  return true;
}

inline bool independent(const Graph& g, std::uint64_t set) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if ((set >> a & 1) && (set >> b & 1) && g.adjacent(a, b)) return false;
  return true;
}

// All maximal independent sets by testing every vertex subset; ascending.
inline std::vector<std::uint64_t> mis_family(const Graph& g) {
  std::vector<std::uint64_t> out;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!independent(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1) && independent(g, s | (std::uint64_t{1} << v))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

inline Graph from_pair_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace mtf::oracle
