#include "mtf/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "mtf/graph6.hpp"

namespace mtf {

namespace {

std::vector<std::uint8_t> bits_from_hex(std::string_view hex, std::size_t count) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  std::vector<std::uint8_t> bits(count, 0);
  std::size_t position = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, position += 4) {
    const char c = *it;
    int digit = 0;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else throw Error("invalid hex digit '" + std::string(1, c) + "' in choice vector");
    for (int b = 0; b < 4; ++b) {
      if (!((digit >> b) & 1)) continue;
      if (position + b >= count)
        throw Error("choice vector has a set bit beyond its " + std::to_string(count) + " choices");
      bits[position + b] = 1;
    }
  }
  return bits;
}

void check_folklore_order(int n) {
  if (n < 4 || n % 4 != 0 || n > kMaxVertices)
    throw std::invalid_argument("folklore construction needs n divisible by 4 (4 <= n <= 64), got " +
                                std::to_string(n));
}

void check_kr_shape(int n, int r) {
  if (r < 2) throw std::invalid_argument("class count r must be at least 2");
  if (n < 2 * r || n % (2 * r) != 0 || n > kMaxVertices)
    throw std::invalid_argument("n must be a positive multiple of 2r (n <= 64), got n=" + std::to_string(n) +
                                " r=" + std::to_string(r));
}

struct MatchingEdge {
  int cls;
  int a;
  int b;
};

std::vector<MatchingEdge> kr_matching_edges(int n, int r) {
  const int s = n / r;
  std::vector<MatchingEdge> edges;
  for (int c = 0; c + 1 < r; ++c)
    for (int j = 0; j < s / 2; ++j) edges.push_back({c, c * s + 2 * j, c * s + 2 * j + 1});
  return edges;
}

// Upper triangle as a 128-bit key, valid for n <= 16.
unsigned __int128 pattern_key(const Graph& g) {
  unsigned __int128 key = 0;
  int k = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v, ++k)
      if (g.adjacent(u, v)) key |= static_cast<unsigned __int128>(1) << k;
  return key;
}

}  // namespace

FolkloreChoice FolkloreChoice::zeros(int n) {
  check_folklore_order(n);
  return {n, std::vector<std::uint8_t>(static_cast<std::size_t>(n / 4) * (n / 2), 0)};
}

FolkloreChoice FolkloreChoice::from_hex(int n, std::string_view hex) {
  check_folklore_order(n);
  return {n, bits_from_hex(hex, static_cast<std::size_t>(n / 4) * (n / 2))};
}

Graph folklore_graph(const FolkloreChoice& choice) {
  const int n = choice.n;
  check_folklore_order(n);
  const int half = n / 2;
  if (choice.bits.size() != static_cast<std::size_t>(n / 4) * half)
    throw std::invalid_argument("folklore choice must have exactly n^2/8 bits");
  Graph g(n);
  for (int i = 0; i < n / 4; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    for (int y = 0; y < half; ++y) {
      const std::uint8_t pick = choice.bits[static_cast<std::size_t>(i) * half + y];
      if (pick > 1) throw std::invalid_argument("folklore choice bits must be 0 or 1");
      g.add_edge(2 * i + pick, half + y);
    }
  }
  return g;
}

VerificationReport folklore_family_stats(int n, int shards, int guard) {
  Stopwatch clock;
  check_folklore_order(n);
  if (n > guard)
    throw GuardViolation("folklore_family_stats: n=" + std::to_string(n) + " exceeds guard " + std::to_string(guard));
  if (n > 16) throw GuardViolation("folklore_family_stats: full enumeration beyond n=16 is unsupported");
  if (shards < 1) throw std::invalid_argument("shards must be positive");

  const int k = n * n / 8;
  const std::uint64_t total = std::uint64_t{1} << k;

  struct Partial {
    std::vector<unsigned __int128> keys;
    std::uint64_t triangle_free = 0;
    std::uint64_t maximal = 0;
    std::optional<Graph> bad;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(shards));
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s)
    workers.emplace_back([&, s] {
      Partial& p = partial[s];
      const std::uint64_t lo = total * static_cast<std::uint64_t>(s) / shards;
      const std::uint64_t hi = total * static_cast<std::uint64_t>(s + 1) / shards;
      FolkloreChoice choice = FolkloreChoice::zeros(n);
      for (std::uint64_t c = lo; c < hi; ++c) {
        for (int j = 0; j < k; ++j) choice.bits[j] = static_cast<std::uint8_t>((c >> j) & 1U);
        const Graph g = folklore_graph(choice);
        p.keys.push_back(pattern_key(g));
        if (is_triangle_free(g)) ++p.triangle_free;
        else if (!p.bad) p.bad = g;
        if (is_maximal_triangle_free(g)) ++p.maximal;
      }
    });
  for (auto& w : workers) w.join();

  std::vector<unsigned __int128> keys;
  std::uint64_t triangle_free = 0;
  std::uint64_t maximal = 0;
  std::optional<Graph> bad;
  for (auto& p : partial) {
    keys.insert(keys.end(), p.keys.begin(), p.keys.end());
    triangle_free += p.triangle_free;
    maximal += p.maximal;
    if (p.bad && !bad) bad = p.bad;
  }
  std::sort(keys.begin(), keys.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());

  VerificationReport report;
  report.check_name = "folklore_family_stats_n" + std::to_string(n);
  report.parameters["n"] = std::to_string(n);
  report.parameters["fraction_maximal"] =
      Rational(static_cast<std::int64_t>(maximal), static_cast<std::int64_t>(total)).to_string();
  report.counts["total"] = static_cast<std::int64_t>(total);
  report.counts["distinct"] = static_cast<std::int64_t>(distinct);
  report.counts["triangle_free"] = static_cast<std::int64_t>(triangle_free);
  report.counts["maximal"] = static_cast<std::int64_t>(maximal);
  if (bad) report.fail("member with a triangle: " + to_graph6(*bad));
  report.require(distinct == total, "choices collide: " + std::to_string(distinct) + " distinct of " +
                                        std::to_string(total));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::size_t KrChoice::pair_count(int n, int r) {
  check_kr_shape(n, r);
  const auto edges = kr_matching_edges(n, r);
  std::size_t count = 0;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (edges[a].cls != edges[b].cls) ++count;
  return count;
}

std::size_t KrChoice::vertex_count(int n, int r) {
  check_kr_shape(n, r);
  return kr_matching_edges(n, r).size() * static_cast<std::size_t>(n / r);
}

KrChoice KrChoice::zeros(int n, int r) {
  return {n, r, std::vector<std::uint8_t>(pair_count(n, r), 0), std::vector<std::uint8_t>(vertex_count(n, r), 0)};
}

KrChoice KrChoice::from_hex(int n, int r, std::string_view hex) {
  KrChoice choice = zeros(n, r);
  const std::size_t pairs = choice.pair_choices.size();
  const auto bits = bits_from_hex(hex, 2 * pairs + choice.vertex_choices.size());
  for (std::size_t i = 0; i < pairs; ++i)
    choice.pair_choices[i] = static_cast<std::uint8_t>(bits[2 * i] | (bits[2 * i + 1] << 1));
  for (std::size_t i = 0; i < choice.vertex_choices.size(); ++i) choice.vertex_choices[i] = bits[2 * pairs + i];
  return choice;
}

Graph kr_free_graph(const KrChoice& choice) {
  const int n = choice.n;
  const int r = choice.r;
  check_kr_shape(n, r);
  const int s = n / r;
  const auto matching = kr_matching_edges(n, r);
  if (choice.pair_choices.size() != KrChoice::pair_count(n, r) ||
      choice.vertex_choices.size() != KrChoice::vertex_count(n, r))
    throw std::invalid_argument("choice vector lengths do not match (n, r)");

  Graph g(n);
  for (const auto& e : matching) g.add_edge(e.a, e.b);

  std::size_t k = 0;
  for (std::size_t a = 0; a < matching.size(); ++a)
    for (std::size_t b = a + 1; b < matching.size(); ++b) {
      if (matching[a].cls == matching[b].cls) continue;
      const int omit = choice.pair_choices[k++];
      if (omit > 3) throw std::invalid_argument("pair choice outside {0,1,2,3}");
      const int ends_a[2] = {matching[a].a, matching[a].b};
      const int ends_b[2] = {matching[b].a, matching[b].b};
      for (int idx = 0; idx < 4; ++idx)
        if (idx != omit) g.add_edge(ends_a[idx >> 1], ends_b[idx & 1]);
    }

  const int independent_start = (r - 1) * s;
  for (std::size_t e = 0; e < matching.size(); ++e)
    for (int y = 0; y < s; ++y) {
      const std::uint8_t pick = choice.vertex_choices[e * s + y];
      if (pick > 1) throw std::invalid_argument("vertex choice must be 0 or 1");
      g.add_edge(pick ? matching[e].b : matching[e].a, independent_start + y);
    }

  assert(!has_clique(g, r + 1));
  return g;
}

KrEntropy kr_entropy_check(int n, int r) {
  const auto pairs = static_cast<std::int64_t>(KrChoice::pair_count(n, r));
  const auto vertex = static_cast<std::int64_t>(KrChoice::vertex_count(n, r));
  return {Rational(2 * pairs + vertex), Rational(r - 1, r) * Rational(static_cast<std::int64_t>(n) * n, 4)};
}

std::optional<Word> check_matching_partition(const Graph& g, int guard) {
  const int n = g.order();
  if (n > guard)
    throw GuardViolation("check_matching_partition: n=" + std::to_string(n) + " exceeds guard " +
                         std::to_string(guard));
  if (n > 40) throw GuardViolation("check_matching_partition: subset scan beyond n=40 is unsupported");
  const Word all = g.vertex_mask();
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < limit; ++x) {
    const Word y = all & ~x;
    bool ok = true;
    for (Word w = y; ok && w; w &= w - 1)
      if (g.row(std::countr_zero(w)) & y) ok = false;
    for (Word w = x; ok && w; w &= w - 1)
      if (popcount(g.row(std::countr_zero(w)) & x) != 1) ok = false;
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace mtf
