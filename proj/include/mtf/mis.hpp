#pragma once

// Maximal independent sets and the exhaustive check of the bound
// "every triangle-free graph on m vertices has at most 2^{m/2} of them".

#include <cstdint>
#include <functional>
#include <vector>

#include "mtf/graph.hpp"
#include "mtf/report.hpp"

namespace mtf {

struct MisFamily {
  Graph host;
  // One bit word per set, strictly ascending.
  std::vector<Word> sets;
};

MisFamily enumerate_mis(const Graph& g);
std::uint64_t mis_count(const Graph& g);

bool is_maximal_independent(const Graph& g, Word set);

// count <= 2^{m/2}, decided as count^2 <= 2^m in exact integer arithmetic.
bool within_mis_bound(std::uint64_t count, int m);

// Calls fn(g) once for every labeled triangle-free graph on m vertices whose
// generation prefix falls into `shard` (of `shards`). The union over all
// shards is every such graph exactly once.
void for_each_triangle_free(int m, const std::function<void(const Graph&)>& fn, int shard = 0, int shards = 1);

inline constexpr int kDefaultHujterTuzaLimit = 8;

// Exhaustive over m = 1..max_n. On success the witnesses are the extremal
// graphs for m = 1..max_n in graph6 (smallest bit pattern among ties); on
// failure the single witness is the first counterexample.
VerificationReport verify_hujter_tuza(int max_n, int shards = 1, int guard = kDefaultHujterTuzaLimit);

}  // namespace mtf
