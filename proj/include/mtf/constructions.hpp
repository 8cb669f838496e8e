#pragma once

// Explicit extremal families: the matching-plus-independent-set lower-bound
// family for maximal triangle-free graphs and its r-class K_{r+1}-free
// generalization.
//
// Vertex layout is fixed. Folklore: X = 0..n/2-1 with matching edges
// (2i, 2i+1), Y = n/2..n-1. K_{r+1}-free: class c is the block
// [c*n/r, (c+1)*n/r); classes 0..r-2 carry the matchings (2i, 2i+1) inside
// their block, class r-1 is independent.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mtf/graph.hpp"
#include "mtf/rational.hpp"
#include "mtf/report.hpp"

namespace mtf {

// bits[i * (n/2) + y] picks the endpoint of matching edge i joined to the
// y-th vertex of Y: 0 -> 2i, 1 -> 2i+1.
struct FolkloreChoice {
  int n = 0;
  std::vector<std::uint8_t> bits;

  static FolkloreChoice zeros(int n);
  // Bit k of the (little-endian) hex number is choice k.
  static FolkloreChoice from_hex(int n, std::string_view hex);
};

Graph folklore_graph(const FolkloreChoice& choice);

inline constexpr int kDefaultFolkloreLimit = 12;

// Iterates all 2^{n^2/8} choices; counts total, distinct, triangle_free and
// maximal graphs. fraction_maximal is recorded as an exact fraction.
VerificationReport folklore_family_stats(int n, int shards = 1, int guard = kDefaultFolkloreLimit);

// Matching edges are numbered globally: class c, local pair j -> c*(s/2) + j
// with s = n/r.
//
// pair_choices: one entry per pair (a, b), a < b, of matching edges in
// different classes, lexicographic in (a, b). Value k omits cross edge k of
// (a0,b0), (a0,b1), (a1,b0), (a1,b1).
//
// vertex_choices: entry [e * s + y] joins the y-th vertex of the independent
// class to endpoint 0 or 1 of matching edge e (same layout as the folklore
// bits, so r = 2 reproduces folklore_graph exactly).
struct KrChoice {
  int n = 0;
  int r = 0;
  std::vector<std::uint8_t> pair_choices;
  std::vector<std::uint8_t> vertex_choices;

  static std::size_t pair_count(int n, int r);
  static std::size_t vertex_count(int n, int r);
  static KrChoice zeros(int n, int r);
  // The hex number packs pair choices two bits each from bit 0 upward,
  // followed by one bit per vertex choice.
  static KrChoice from_hex(int n, int r, std::string_view hex);
};

Graph kr_free_graph(const KrChoice& choice);

struct KrEntropy {
  Rational choice_bits;  // log2 of the number of distinct choice vectors
  Rational closed_form;  // (1 - 1/r) n^2 / 4
  bool matches() const { return choice_bits == closed_form; }
};

KrEntropy kr_entropy_check(int n, int r);

inline constexpr int kDefaultPartitionLimit = 24;

// Smallest X (as a bit word) such that G[X] is a perfect matching and V - X
// is independent, or nullopt.
std::optional<Word> check_matching_partition(const Graph& g, int guard = kDefaultPartitionLimit);

}  // namespace mtf
