#include "mtf/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "mtf/constructions.hpp"

namespace mtf {

namespace {

void check_guard(const char* op, int n, int guard) {
  if (n < 1) throw std::invalid_argument(std::string(op) + ": n must be positive");
  if (n > guard)
    throw GuardViolation(std::string(op) + ": n=" + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  if (n > kMaxVertices) throw GuardViolation(std::string(op) + ": n beyond 64");
}

double rounded_log_ratio(std::uint64_t count, int n) {
  const double value = std::log2(static_cast<double>(count)) / (static_cast<double>(n) * n);
  return std::round(value * 1e6) / 1e6;
}

// Edge decisions in a fixed order; a shard only explores the subtrees whose
// decision prefix of length `split_depth` has index = shard (mod shards).
class MaximalSearch {
 public:
  MaximalSearch(int n, const std::vector<int>& order, int shard, int shards, bool collect)
      : n_(n), shard_(shard), shards_(shards), collect_(collect) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges_.push_back({order[i], order[j]});
    split_depth_ = std::min<std::size_t>(edges_.size(), 8);
    for (int u = 0; u < n; ++u) possible_[u] = low_mask(n) & ~bit(u);
  }

  void run() { descend(0); }

  std::uint64_t count() const { return count_; }
  std::vector<Graph>& graphs() { return graphs_; }

 private:
  bool pair_ok(int a, int b) const { return possible_[a] & possible_[b]; }

  bool still_feasible(int u, int v) const {
    if (!pair_ok(u, v)) return false;
    const Word others = low_mask(n_) & ~bit(u) & ~bit(v);
    for (Word w = others & ~possible_[u]; w; w &= w - 1)
      if (!pair_ok(u, std::countr_zero(w))) return false;
    for (Word w = others & ~possible_[v]; w; w &= w - 1)
      if (!pair_ok(v, std::countr_zero(w))) return false;
    return true;
  }

  void descend(std::size_t k) {
    if (k == split_depth_ && (prefix_++ % static_cast<std::uint64_t>(shards_)) != static_cast<std::uint64_t>(shard_))
      return;
    if (k == edges_.size()) {
      const Graph g = Graph::from_rows(n_, std::span<const Word>(present_.data(), static_cast<std::size_t>(n_)));
      if (!is_maximal_triangle_free(g)) return;
      ++count_;
      if (collect_) graphs_.push_back(g);
      return;
    }
    const auto [u, v] = edges_[k];
    if (!(present_[u] & present_[v])) {
      present_[u] |= bit(v);
      present_[v] |= bit(u);
      descend(k + 1);
      present_[u] &= ~bit(v);
      present_[v] &= ~bit(u);
    }
    possible_[u] &= ~bit(v);
    possible_[v] &= ~bit(u);
    if (still_feasible(u, v)) descend(k + 1);
    possible_[u] |= bit(v);
    possible_[v] |= bit(u);
  }

  int n_;
  int shard_;
  int shards_;
  bool collect_;
  std::vector<Edge> edges_;
  std::size_t split_depth_ = 0;
  std::uint64_t prefix_ = 0;
  std::uint64_t count_ = 0;
  std::vector<Graph> graphs_;
  std::array<Word, kMaxVertices> present_{};
  std::array<Word, kMaxVertices> possible_{};
};

}  // namespace

std::vector<Graph> brute_force_maximal_tf(int n, int guard) {
  check_guard("brute_force_maximal_tf", n, guard);
  if (n > 8) throw GuardViolation("brute_force_maximal_tf: 2^C(n,2) scan beyond n=8 is unsupported");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Graph g(n);
    for (std::uint64_t w = mask; w; w &= w - 1) {
      const Edge& e = pairs[std::countr_zero(w)];
      g.add_edge(e.u, e.v);
    }
    if (is_maximal_triangle_free(g)) out.push_back(g);
  }
  return out;
}

EnumerationResult enumerate_maximal_tf(int n, const EnumerateOptions& options) {
  Stopwatch clock;
  check_guard("enumerate_maximal_tf", n, options.guard);
  if (options.shards < 1) throw std::invalid_argument("shards must be positive");
  std::vector<int> order = options.vertex_order;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if (order.empty()) order = identity;
  if (order.size() != identity.size() || !std::is_permutation(order.begin(), order.end(), identity.begin()))
    throw std::invalid_argument("vertex_order must be a permutation of 0..n-1");

  std::vector<MaximalSearch> searches;
  searches.reserve(static_cast<std::size_t>(options.shards));
  for (int s = 0; s < options.shards; ++s) searches.emplace_back(n, order, s, options.shards, options.collect);
  std::vector<std::thread> workers;
  for (auto& search : searches) workers.emplace_back([&search] { search.run(); });
  for (auto& w : workers) w.join();

  EnumerationResult result;
  for (auto& search : searches) {
    result.row.labeled_count += search.count();
    auto& g = search.graphs();
    result.graphs.insert(result.graphs.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
  }
  std::sort(result.graphs.begin(), result.graphs.end(), pattern_less);
  result.row.n = n;
  result.row.log2_count_over_n2 = rounded_log_ratio(result.row.labeled_count, n);
  result.row.wall_time_ms = clock.elapsed_ms();
  return result;
}

CountTable growth_table(int n_max, const EnumerateOptions& options) {
  check_guard("growth_table", n_max, options.guard);
  if (!options.vertex_order.empty()) throw std::invalid_argument("growth_table uses the identity search order");
  EnumerateOptions per_row = options;
  per_row.collect = false;
  CountTable table;
  for (int n = 1; n <= n_max; ++n) table.rows.push_back(enumerate_maximal_tf(n, per_row).row);
  return table;
}

PartitionCensus remark3_fraction(int n, int guard, int shards) {
  check_guard("remark3_fraction", n, guard);
  EnumerateOptions options;
  options.shards = shards;
  options.guard = guard;
  options.collect = true;
  const auto family = enumerate_maximal_tf(n, options).graphs;
  PartitionCensus census;
  census.total = family.size();
  for (const Graph& g : family)
    if (check_matching_partition(g)) ++census.admitting;
  return census;
}

nlohmann::json table_to_json(const CountTable& table, bool include_timing) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CountRow& row : table.rows) {
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(6) << row.log2_count_over_n2;
    nlohmann::json j{{"n", row.n}, {"labeled_count", row.labeled_count}, {"log2_count_over_n2", ratio.str()}};
    if (include_timing) j["wall_time_ms"] = row.wall_time_ms;
    rows.push_back(std::move(j));
  }
  return {{"rows", rows}};
}

std::string table_to_text(const CountTable& table) {
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(16) << "labeled_count" << std::setw(20) << "log2(count)/n^2"
      << std::setw(14) << "wall_ms" << "\n";
  for (const CountRow& row : table.rows)
    out << std::setw(4) << row.n << std::setw(16) << row.labeled_count << std::setw(20) << std::fixed
        << std::setprecision(6) << row.log2_count_over_n2 << std::setw(14) << row.wall_time_ms << "\n";
  return out.str();
}

}  // namespace mtf
