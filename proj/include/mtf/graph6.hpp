#pragma once

// graph6 encoding (McKay): N(n) followed by the upper triangle in column
// order, packed big-endian into 6-bit groups offset by 63.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mtf/graph.hpp"

namespace mtf {

class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header. Orders above 64 raise
// GuardViolation; anything malformed raises Graph6Error.
Graph from_graph6(std::string_view text);

// Newline-delimited corpora. Blank lines are skipped; errors carry the
// 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace mtf
