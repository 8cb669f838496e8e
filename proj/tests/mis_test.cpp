#include "mtf/mis.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mtf/graph6.hpp"
#include "oracles.hpp"

namespace mtf {
namespace {

Graph perfect_matching(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

TEST(MisTest, EmptyGraphHasOneSet) {
  for (int k = 1; k <= 10; ++k) {
    const auto family = enumerate_mis(Graph(k));
    ASSERT_EQ(family.sets.size(), 1u);
    EXPECT_EQ(family.sets[0], low_mask(k));
  }
}

TEST(MisTest, Examples) {
  // Frozen from the subset scan in tests/fixtures/compute_fixtures.py.
  EXPECT_EQ(enumerate_mis(perfect_matching(2)).sets, (std::vector<Word>{5, 6, 9, 10}));
  EXPECT_EQ(enumerate_mis(Graph::cycle(5)).sets, (std::vector<Word>{5, 9, 10, 18, 20}));
  EXPECT_EQ(mis_count(Graph(1)), 1u);
  EXPECT_EQ(mis_count(Graph::complete(3)), 3u);
  EXPECT_EQ(mis_count(Graph(0)), 1u);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(mis_count(perfect_matching(k)), std::uint64_t{1} << k);
    EXPECT_EQ(oracle::mis_family(perfect_matching(k)).size(), std::size_t{1} << k);
  }
}

TEST(MisTest, MembershipPredicate) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_TRUE(is_maximal_independent(c5, 5));
  EXPECT_FALSE(is_maximal_independent(c5, 1));   // {0} extends by 2
  EXPECT_FALSE(is_maximal_independent(c5, 3));   // {0,1} not independent
  EXPECT_FALSE(is_maximal_independent(c5, 64));  // out of range
}

TEST(MisProperty, MatchesSubsetScan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, (trial % 5) * 0.2 + 0.1);
    const auto family = enumerate_mis(g);
    ASSERT_EQ(family.sets, oracle::mis_family(g)) << to_graph6(g);
    ASSERT_EQ(mis_count(g), family.sets.size());
  }
}

TEST(MisProperty, CountAgreesWithFamilyOnLargerGraphs) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 17);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const auto family = enumerate_mis(g);
    ASSERT_EQ(mis_count(g), family.sets.size());
    ASSERT_TRUE(std::is_sorted(family.sets.begin(), family.sets.end()));
    ASSERT_EQ(std::adjacent_find(family.sets.begin(), family.sets.end()), family.sets.end());
    for (Word s : family.sets) ASSERT_TRUE(is_maximal_independent(g, s));
  }
}

TEST(MisTest, BoundUsesExactIntegers) {
  EXPECT_TRUE(within_mis_bound(5, 5));   // 25 <= 32
  EXPECT_FALSE(within_mis_bound(6, 5));  // 36 > 32
  EXPECT_TRUE(within_mis_bound(16, 8));
  EXPECT_FALSE(within_mis_bound(17, 8));
  EXPECT_TRUE(within_mis_bound(std::uint64_t{1} << 32, 64));
  EXPECT_FALSE(within_mis_bound((std::uint64_t{1} << 32) + 1, 64));
}

TEST(TriangleFreeGenerator, CountsMatchBruteForce) {
  // m <= 6 from the Python oracle; m = 7 by the 2^21 scan below.
  const std::uint64_t expected[] = {1, 1, 2, 7, 41, 388, 5789};
  for (int m = 0; m <= 6; ++m) {
    std::uint64_t count = 0;
    for_each_triangle_free(m, [&](const Graph& g) {
      ASSERT_TRUE(is_triangle_free(g));
      ++count;
    });
    EXPECT_EQ(count, expected[m]) << m;
  }
  std::uint64_t scanned = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 21); ++mask)
    if (is_triangle_free(oracle::from_pair_mask(7, mask))) ++scanned;
  std::uint64_t generated = 0;
  for_each_triangle_free(7, [&](const Graph&) { ++generated; });
  EXPECT_EQ(generated, scanned);
}

TEST(TriangleFreeGenerator, ShardsPartitionTheGraphs) {
  std::vector<Graph> whole;
  for_each_triangle_free(6, [&](const Graph& g) { whole.push_back(g); });
  std::vector<Graph> parts;
  for (int s = 0; s < 3; ++s) for_each_triangle_free(6, [&](const Graph& g) { parts.push_back(g); }, s, 3);
  auto canon = [](std::vector<Graph>& v) { std::sort(v.begin(), v.end(), pattern_less); };
  canon(whole);
  canon(parts);
  EXPECT_EQ(parts, whole);
  EXPECT_EQ(std::adjacent_find(whole.begin(), whole.end()), whole.end());
}

TEST(HujterTuzaTest, SmallCases) {
  const auto r2 = verify_hujter_tuza(2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.counts.at("max_mis_m2"), 2);
  EXPECT_EQ(from_graph6(r2.witnesses.at(1)), Graph(2, {{0, 1}}));

  const auto r4 = verify_hujter_tuza(4);
  EXPECT_TRUE(r4.passed());
  EXPECT_EQ(r4.counts.at("max_mis_m4"), 4);
  const Graph w4 = from_graph6(r4.witnesses.at(3));
  EXPECT_EQ(w4.edge_count(), 2u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(w4.degree(v), 1);

  const auto r6 = verify_hujter_tuza(6);
  EXPECT_TRUE(r6.passed());
  // Frozen from the Python oracle.
  const std::int64_t max_mis[] = {0, 1, 2, 2, 4, 5, 8};
  const std::int64_t graphs[] = {0, 1, 2, 7, 41, 388, 5789};
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(r6.counts.at("max_mis_m" + std::to_string(m)), max_mis[m]);
    EXPECT_EQ(r6.counts.at("triangle_free_graphs_m" + std::to_string(m)), graphs[m]);
  }
  const Graph w6 = from_graph6(r6.witnesses.at(5));
  EXPECT_EQ(w6.edge_count(), 3u);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(w6.degree(v), 1);
}

TEST(HujterTuzaTest, ShardCountDoesNotChangeTheReport) {
  auto one = verify_hujter_tuza(7, 1);
  auto many = verify_hujter_tuza(7, 5);
  one.elapsed_ms = many.elapsed_ms = 0;
  EXPECT_EQ(one, many);
}

TEST(HujterTuzaTest, Guards) {
  EXPECT_THROW(verify_hujter_tuza(9), GuardViolation);
  EXPECT_THROW(verify_hujter_tuza(0), std::invalid_argument);
  EXPECT_THROW(verify_hujter_tuza(3, 0), std::invalid_argument);
}

// The bound genuinely needs triangle-freeness: K3 has 3 > 2^{1.5} sets.
TEST(HujterTuzaTest, TrianglesBreakTheBound) { EXPECT_FALSE(within_mis_bound(mis_count(Graph::complete(3)), 3)); }

}  // namespace
}  // namespace mtf
