#include "mtf/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "oracles.hpp"

namespace mtf {
namespace {

TEST(FolkloreTest, AllZeroChoiceOnFourVertices) {
  // Matching 0-1, Y = {2,3}, both joined to 0.
  EXPECT_EQ(folklore_graph(FolkloreChoice::zeros(4)), Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(folklore_graph(FolkloreChoice::from_hex(4, "3")), Graph(4, {{0, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(folklore_graph(FolkloreChoice::from_hex(4, "1")), Graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST(FolkloreTest, Shape) {
  const auto choice = FolkloreChoice::from_hex(8, "c3");
  const Graph g = folklore_graph(choice);
  EXPECT_EQ(g.edge_count(), 2u + 2u * 4u);
  EXPECT_TRUE(is_triangle_free(g));
  for (int y = 4; y < 8; ++y) EXPECT_EQ(g.degree(y), 2);
  for (int y = 4; y < 8; ++y) EXPECT_EQ(g.row(y) & ~low_mask(4), Word{0});
}

TEST(FolkloreTest, InvalidInput) {
  EXPECT_THROW(FolkloreChoice::zeros(6), std::invalid_argument);
  EXPECT_THROW(FolkloreChoice::zeros(0), std::invalid_argument);
  EXPECT_THROW(FolkloreChoice::zeros(68), std::invalid_argument);
  EXPECT_THROW(FolkloreChoice::from_hex(4, "10"), Error);  // bit 4 of a 4-bit choice
  EXPECT_THROW(FolkloreChoice::from_hex(4, "xyz"), Error);
  FolkloreChoice bad = FolkloreChoice::zeros(4);
  bad.bits[1] = 2;
  EXPECT_THROW(folklore_graph(bad), std::invalid_argument);
  bad.bits.pop_back();
  EXPECT_THROW(folklore_graph(bad), std::invalid_argument);
}

TEST(FolkloreTest, FamilyStats) {
  // Frozen from the Python oracle.
  const auto r4 = folklore_family_stats(4);
  EXPECT_TRUE(r4.passed());
  EXPECT_EQ(r4.counts.at("total"), 4);
  EXPECT_EQ(r4.counts.at("distinct"), 4);
  EXPECT_EQ(r4.counts.at("triangle_free"), 4);
  EXPECT_EQ(r4.counts.at("maximal"), 2);
  EXPECT_EQ(r4.parameters.at("fraction_maximal"), "1/2");

  const auto r8 = folklore_family_stats(8, 3);
  EXPECT_TRUE(r8.passed());
  EXPECT_EQ(r8.counts.at("total"), 256);
  EXPECT_EQ(r8.counts.at("distinct"), 256);
  EXPECT_EQ(r8.counts.at("triangle_free"), 256);
  EXPECT_EQ(r8.counts.at("maximal"), 0);
}

TEST(FolkloreTest, StatsMaximalCountMatchesOracle) {
  std::int64_t maximal = 0;
  for (int c = 0; c < 4; ++c)
    if (oracle::maximal_triangle_free(folklore_graph(FolkloreChoice::from_hex(4, std::to_string(c))))) ++maximal;
  EXPECT_EQ(folklore_family_stats(4).counts.at("maximal"), maximal);
}

TEST(FolkloreTest, Guards) {
  EXPECT_THROW(folklore_family_stats(16), GuardViolation);
  EXPECT_THROW(folklore_family_stats(20, 1, 64), GuardViolation);
  EXPECT_THROW(folklore_family_stats(4, 0), std::invalid_argument);
}

TEST(KrTest, Counts) {
  EXPECT_EQ(KrChoice::pair_count(8, 2), 0u);
  EXPECT_EQ(KrChoice::vertex_count(8, 2), 8u);
  EXPECT_EQ(KrChoice::pair_count(12, 3), 4u);
  EXPECT_EQ(KrChoice::vertex_count(12, 3), 16u);
  EXPECT_EQ(KrChoice::pair_count(24, 4), 27u);
  EXPECT_EQ(KrChoice::vertex_count(24, 4), 54u);
}

TEST(KrTest, SmallestThreeClassGraph) {
  // n=6, r=3: matchings 0-1 and 2-3, independent class {4,5}.
  const Graph g = kr_free_graph(KrChoice::zeros(6, 3));
  // Pair choice 0 omits 0-2; all vertex choices pick endpoint 0 (vertices 0 and 2).
  const Graph expected(6, {{0, 1}, {2, 3}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {0, 5}, {2, 4}, {2, 5}});
  EXPECT_EQ(g, expected);
  EXPECT_FALSE(has_clique(g, 4));
  EXPECT_TRUE(has_clique(g, 3));
}

TEST(KrTest, HexLayout) {
  // Two bits of pair choice (value 3: omit 1-3), then four vertex bits.
  const Graph g = kr_free_graph(KrChoice::from_hex(6, 3, "3b"));  // 0b111011
  const KrChoice c = KrChoice::from_hex(6, 3, "3b");
  EXPECT_EQ(c.pair_choices, (std::vector<std::uint8_t>{3}));
  EXPECT_EQ(c.vertex_choices, (std::vector<std::uint8_t>{0, 1, 1, 1}));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(1, 5));
  EXPECT_TRUE(g.adjacent(3, 4));
  EXPECT_TRUE(g.adjacent(3, 5));
  EXPECT_THROW(KrChoice::from_hex(6, 3, "40"), Error);
}

TEST(KrTest, InvalidShapes) {
  EXPECT_THROW(KrChoice::zeros(6, 1), std::invalid_argument);
  EXPECT_THROW(KrChoice::zeros(8, 3), std::invalid_argument);
  EXPECT_THROW(KrChoice::zeros(66, 3), std::invalid_argument);
  KrChoice c = KrChoice::zeros(6, 3);
  c.pair_choices[0] = 4;
  EXPECT_THROW(kr_free_graph(c), std::invalid_argument);
  c = KrChoice::zeros(6, 3);
  c.vertex_choices.push_back(0);
  EXPECT_THROW(kr_free_graph(c), std::invalid_argument);
}

TEST(KrTest, TwoClassesReproduceFolklore) {
  std::mt19937_64 rng(2);
  for (int n : {4, 8, 12, 16}) {
    for (int trial = 0; trial < 20; ++trial) {
      FolkloreChoice f = FolkloreChoice::zeros(n);
      KrChoice k = KrChoice::zeros(n, 2);
      ASSERT_EQ(f.bits.size(), k.vertex_choices.size());
      for (std::size_t i = 0; i < f.bits.size(); ++i) f.bits[i] = k.vertex_choices[i] = rng() & 1;
      ASSERT_EQ(kr_free_graph(k), folklore_graph(f));
    }
  }
}

TEST(KrProperty, RandomChoicesAreCliqueFree) {
  std::mt19937_64 rng(4);
  for (int r = 2; r <= 5; ++r)
    for (int n = 2 * r; n <= 24; n += 2 * r)
      for (int trial = 0; trial < 10; ++trial) {
        KrChoice c = KrChoice::zeros(n, r);
        for (auto& p : c.pair_choices) p = rng() % 4;
        for (auto& v : c.vertex_choices) v = rng() & 1;
        const Graph g = kr_free_graph(c);
        ASSERT_FALSE(has_clique(g, r + 1)) << n << " " << r;
      }
}

TEST(KrTest, DistinctChoicesGiveDistinctGraphs) {
  // n=6, r=3 has 2 + 4 choice bits: all 64 choices are distinct graphs.
  std::vector<Graph> graphs;
  for (int x = 0; x < 64; ++x) {
    char hex[8];
    std::snprintf(hex, sizeof hex, "%x", x);
    graphs.push_back(kr_free_graph(KrChoice::from_hex(6, 3, hex)));
  }
  std::sort(graphs.begin(), graphs.end(), pattern_less);
  EXPECT_EQ(std::adjacent_find(graphs.begin(), graphs.end()), graphs.end());
}

TEST(KrEntropyTest, Examples) {
  EXPECT_EQ(kr_entropy_check(8, 2).choice_bits, Rational(8));
  EXPECT_EQ(kr_entropy_check(12, 3).choice_bits, Rational(24));
  EXPECT_EQ(kr_entropy_check(24, 4).choice_bits, Rational(108));
  EXPECT_TRUE(kr_entropy_check(24, 4).matches());
}

TEST(KrEntropyTest, ClosedFormEverywhere) {
  for (int r = 2; r <= 8; ++r)
    for (int n = 2 * r; n <= 64; n += 2 * r) {
      const std::int64_t s = n / r;
      const std::int64_t edges = (r - 1) * (s / 2);
      const std::int64_t pairs = (r - 1) * (r - 2) / 2 * (s / 2) * (s / 2);
      const auto check = kr_entropy_check(n, r);
      ASSERT_EQ(check.choice_bits, Rational(2 * pairs + edges * s));
      ASSERT_EQ(check.closed_form, Rational(static_cast<std::int64_t>(r - 1) * n * n, 4 * r));
      ASSERT_TRUE(check.matches()) << n << " " << r;
    }
}

std::optional<Word> naive_partition(const Graph& g) {
  const int n = g.order();
  for (Word x = 0; x < (Word{1} << n); ++x) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      int inside = 0;
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v)) continue;
        const bool ux = (x >> u) & 1, vx = (x >> v) & 1;
        if (!ux && !vx) ok = false;
        if (ux && vx) ++inside;
      }
      if (((x >> u) & 1) && inside != 1) ok = false;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

TEST(MatchingPartitionTest, Examples) {
  EXPECT_EQ(check_matching_partition(Graph(4, {{0, 1}, {0, 2}, {0, 3}})), Word{3});
  EXPECT_EQ(check_matching_partition(Graph::cycle(5)), std::nullopt);
  EXPECT_EQ(check_matching_partition(Graph(2, {{0, 1}})), Word{3});
  EXPECT_EQ(check_matching_partition(Graph(3)), Word{0});
  const Graph f = folklore_graph(FolkloreChoice::from_hex(8, "9c"));
  const auto x = check_matching_partition(f);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(popcount(*x) % 2, 0);
}

TEST(MatchingPartitionTest, AgreesWithNaiveScan) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 4));
    ASSERT_EQ(check_matching_partition(g), naive_partition(g));
  }
}

TEST(MatchingPartitionTest, Guards) {
  EXPECT_THROW(check_matching_partition(Graph(25)), GuardViolation);
  EXPECT_EQ(check_matching_partition(Graph(25), 30), Word{0});
  EXPECT_THROW(check_matching_partition(Graph(41), 64), GuardViolation);
}

}  // namespace
}  // namespace mtf
