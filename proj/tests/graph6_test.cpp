#include "mtf/graph6.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"

namespace mtf {
namespace {

// Encodings produced by networkx (tests/fixtures/compute_fixtures.py).
TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph::complete(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph::cycle(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph::path(4)), "Ch");
  EXPECT_EQ(to_graph6(Graph(4, {{0, 1}, {0, 2}, {0, 3}})), "Cs");
  const Graph petersen(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                            {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  EXPECT_EQ(to_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(from_graph6("IheA@GUAo"), petersen);
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6Test, LongSizeField) {
  const std::string e63 = to_graph6(Graph(63));
  EXPECT_EQ(e63.substr(0, 4), "~??~");
  EXPECT_EQ(e63.size(), 4u + (63 * 62 / 2 + 5) / 6);
  EXPECT_EQ(from_graph6(e63), Graph(63));

  const std::string path64 =
      "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G??"
      "???_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@"
      "????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?"
      "????????@??????????_?????????G?????????@";
  EXPECT_EQ(to_graph6(Graph::path(64)), path64);
  EXPECT_EQ(from_graph6(path64), Graph::path(64));
}

TEST(Graph6Test, HeaderAndCarriageReturn) {
  EXPECT_EQ(from_graph6(">>graph6<<C~"), Graph::complete(4));
  EXPECT_EQ(from_graph6("C~\r"), Graph::complete(4));
}

TEST(Graph6Test, MalformedInput) {
  EXPECT_THROW(from_graph6(""), Graph6Error);
  EXPECT_THROW(from_graph6("C"), Graph6Error);       // truncated data
  EXPECT_THROW(from_graph6("C~~"), Graph6Error);     // too long
  EXPECT_THROW(from_graph6("C~ "), Graph6Error);     // bad character
  EXPECT_THROW(from_graph6("B`"), Graph6Error);      // padding bit set (n=3 uses 3 of 6 bits)
  EXPECT_THROW(from_graph6("~??"), Graph6Error);     // truncated size field
  EXPECT_THROW(from_graph6("~??@"), Graph6Error);    // n=1 in the long form
  EXPECT_THROW(from_graph6("~?@A"), GuardViolation);  // n=65
  EXPECT_THROW(from_graph6("~~??????"), GuardViolation);
}

TEST(Graph6Test, RoundTripProperty) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = oracle::random_graph(rng, n, (trial % 5) * 0.25);
    const std::string text = to_graph6(g);
    for (char c : text) ASSERT_TRUE(c >= 63 && c <= 126);
    ASSERT_EQ(from_graph6(text), g);
  }
}

TEST(Graph6Test, StreamReportsLineNumbers) {
  std::istringstream good("C~\n\n@\nDhc\n");
  const auto graphs = read_graph6_stream(good);
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_EQ(graphs[2], Graph::cycle(5));

  std::istringstream bad("C~\nDh\n@\n");
  try {
    read_graph6_stream(bad);
    FAIL() << "truncated line accepted";
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }

  std::istringstream big("C~\n~?@A\n");
  EXPECT_THROW(read_graph6_stream(big), GuardViolation);
}

TEST(Graph6Test, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "mtf_graph6_test.g6";
  const std::vector<Graph> graphs{Graph::complete(4), Graph(1), Graph::path(64), Graph::cycle(9)};
  write_graph6_file(path, graphs);
  EXPECT_EQ(read_graph6_file(path), graphs);
  std::filesystem::remove(path);
  EXPECT_THROW(read_graph6_file(path), Error);
}

}  // namespace
}  // namespace mtf
