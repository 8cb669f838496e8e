#include "mtf/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace mtf {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Graph6Error("character outside the graph6 range");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw GuardViolation("unsupported graph order (8-byte size field)");
    if (text.size() < 4) throw Graph6Error("truncated size field");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    if (n < 63) throw Graph6Error("non-canonical size field");
    pos = 4;
  }
  if (n > kMaxVertices) throw GuardViolation("unsupported graph order " + std::to_string(n) + " (limit 64)");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups)
    throw Graph6Error("expected " + std::to_string(groups) + " data bytes, found " + std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const GuardViolation& e) {
      throw GuardViolation("line " + std::to_string(number) + ": " + e.what());
    } catch (const Error& e) {
      throw Graph6Error(e.what(), number);
    }
  }
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_graph6_stream(in);
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph6_stream(out, graphs);
}

}  // namespace mtf
