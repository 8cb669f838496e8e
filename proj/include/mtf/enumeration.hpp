#pragma once

// Labeled maximal triangle-free graphs on [n]: a 2^{C(n,2)} brute-force
// oracle, a pruned backtracking counter, and tables built from them.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtf/graph.hpp"
#include "mtf/rational.hpp"

namespace mtf {

inline constexpr int kDefaultOracleLimit = 6;
inline constexpr int kDefaultEnumerationLimit = 9;
inline constexpr int kDefaultCensusLimit = 7;

// Scans every labeled graph; result is in canonical (bit pattern) order.
std::vector<Graph> brute_force_maximal_tf(int n, int guard = kDefaultOracleLimit);

struct CountRow {
  int n = 0;
  std::uint64_t labeled_count = 0;
  double log2_count_over_n2 = 0.0;  // rounded to 6 decimals
  std::int64_t wall_time_ms = 0;
};

struct CountTable {
  std::vector<CountRow> rows;
};

struct EnumerateOptions {
  int shards = 1;
  int guard = kDefaultEnumerationLimit;
  // Search order: edges are decided in lexicographic order of positions in
  // this permutation. Empty means the identity.
  std::vector<int> vertex_order;
  // Keep the graphs (canonically ordered) in the result.
  bool collect = false;
};

struct EnumerationResult {
  CountRow row;
  std::vector<Graph> graphs;
};

// Backtracking over edge decisions with three prunes: an edge closing a
// triangle is never added; a decided non-edge whose endpoints can no longer
// gain a common neighbor kills the branch; leaves are re-checked for
// maximality.
EnumerationResult enumerate_maximal_tf(int n, const EnumerateOptions& options = {});

CountTable growth_table(int n_max, const EnumerateOptions& options = {});

struct PartitionCensus {
  std::uint64_t admitting = 0;
  std::uint64_t total = 0;
  Rational fraction() const {
    return Rational(static_cast<std::int64_t>(admitting), static_cast<std::int64_t>(total));
  }
};

// How many maximal triangle-free graphs on [n] split into a perfectly
// matched X and an independent Y.
PartitionCensus remark3_fraction(int n, int guard = kDefaultCensusLimit, int shards = 1);

nlohmann::json table_to_json(const CountTable& table, bool include_timing = true);
std::string table_to_text(const CountTable& table);

}  // namespace mtf
