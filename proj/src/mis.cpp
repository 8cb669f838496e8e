#include "mtf/mis.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "mtf/graph6.hpp"

namespace mtf {

namespace {

// Branch on the candidate of highest degree inside the candidate set.
// `chosen` is independent, `candidates` are still addable, `excluded` were
// rejected and still need a neighbor in the final set.
template <class Visit>
void search_mis(const Graph& g, Word chosen, Word candidates, Word excluded, Visit& visit) {
  for (Word x = excluded; x; x &= x - 1)
    if (!(g.row(std::countr_zero(x)) & candidates)) return;
  if (!candidates) {
    visit(chosen);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (Word c = candidates; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const int d = popcount(g.row(v) & candidates);
    if (d > best) {
      best = d;
      pivot = v;
    }
  }
  const Word closed = g.row(pivot) | bit(pivot);
  search_mis(g, chosen | bit(pivot), candidates & ~closed, excluded & ~g.row(pivot), visit);
  search_mis(g, chosen, candidates & ~bit(pivot), excluded | bit(pivot), visit);
}

}  // namespace

MisFamily enumerate_mis(const Graph& g) {
  MisFamily family{g, {}};
  auto collect = [&family](Word set) { family.sets.push_back(set); };
  search_mis(g, 0, g.vertex_mask(), 0, collect);
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

std::uint64_t mis_count(const Graph& g) {
  std::uint64_t count = 0;
  auto tally = [&count](Word) { ++count; };
  search_mis(g, 0, g.vertex_mask(), 0, tally);
  return count;
}

bool is_maximal_independent(const Graph& g, Word set) {
  if (set & ~g.vertex_mask()) return false;
  Word covered = set;
  for (Word s = set; s; s &= s - 1) {
    const Word nbrs = g.row(std::countr_zero(s));
    if (nbrs & set) return false;
    covered |= nbrs;
  }
  return covered == g.vertex_mask();
}

bool within_mis_bound(std::uint64_t count, int m) {
  const unsigned __int128 square = static_cast<unsigned __int128>(count) * count;
  return square <= (static_cast<unsigned __int128>(1) << m);
}

namespace {

struct TriangleFreeGenerator {
  int m;
  int prefix;
  int shard;
  int shards;
  const std::function<void(const Graph&)>& fn;
  std::array<Word, kMaxVertices> rows{};
  std::uint64_t prefix_counter = 0;

  void add_vertex(int k) {
    if (k == prefix) {
      if (static_cast<int>(prefix_counter++ % static_cast<std::uint64_t>(shards)) != shard) return;
    }
    if (k == m) {
      fn(Graph::from_rows(m, std::span<const Word>(rows.data(), static_cast<std::size_t>(m))));
      return;
    }
    // The new vertex k may join any independent subset of 0..k-1.
    choose(k, low_mask(k), 0);
  }

  void choose(int k, Word candidates, Word nbrs) {
    rows[k] = nbrs;
    for (Word s = nbrs; s; s &= s - 1) rows[std::countr_zero(s)] |= bit(k);
    add_vertex(k + 1);
    for (Word s = nbrs; s; s &= s - 1) rows[std::countr_zero(s)] &= ~bit(k);
    rows[k] = 0;
    for (Word c = candidates; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      choose(k, c & ~rows[v] & above(v), nbrs | bit(v));
    }
  }
};

}  // namespace

void for_each_triangle_free(int m, const std::function<void(const Graph&)>& fn, int shard, int shards) {
  if (m < 0 || m > kMaxVertices) throw GuardViolation("unsupported graph order " + std::to_string(m));
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("invalid shard assignment");
  TriangleFreeGenerator gen{m, std::min(m, 5), shard, shards, fn};
  gen.add_vertex(0);
}

namespace {

struct HujterTuzaTally {
  std::uint64_t graphs = 0;
  std::uint64_t best = 0;
  std::optional<Graph> witness;
  std::optional<Graph> counterexample;

  void observe(const Graph& g, std::uint64_t count) {
    ++graphs;
    if (!within_mis_bound(count, g.order()) && (!counterexample || pattern_less(g, *counterexample)))
      counterexample = g;
    if (count > best || (count == best && witness && pattern_less(g, *witness))) {
      best = count;
      witness = g;
    }
  }

  void merge(const HujterTuzaTally& other) {
    graphs += other.graphs;
    if (other.counterexample && (!counterexample || pattern_less(*other.counterexample, *counterexample)))
      counterexample = other.counterexample;
    if (other.witness &&
        (other.best > best || (other.best == best && (!witness || pattern_less(*other.witness, *witness))))) {
      best = other.best;
      witness = other.witness;
    }
  }
};

}  // namespace

VerificationReport verify_hujter_tuza(int max_n, int shards, int guard) {
  Stopwatch clock;
  if (max_n > guard)
    throw GuardViolation("verify_hujter_tuza: max_n=" + std::to_string(max_n) + " exceeds guard " +
                         std::to_string(guard));
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  if (shards < 1) throw std::invalid_argument("shards must be positive");

  VerificationReport report;
  report.check_name = "hujter_tuza";
  report.parameters["max_n"] = std::to_string(max_n);

  std::vector<std::string> extremal;
  for (int m = 1; m <= max_n; ++m) {
    std::vector<HujterTuzaTally> partial(static_cast<std::size_t>(shards));
    std::vector<std::thread> workers;
    for (int s = 0; s < shards; ++s)
      workers.emplace_back([&, s] {
        for_each_triangle_free(
            m, [&](const Graph& g) { partial[s].observe(g, mis_count(g)); }, s, shards);
      });
    for (auto& w : workers) w.join();
    HujterTuzaTally total;
    for (const auto& p : partial) total.merge(p);

    const std::string suffix = "_m" + std::to_string(m);
    report.counts["triangle_free_graphs" + suffix] = static_cast<std::int64_t>(total.graphs);
    report.counts["max_mis" + suffix] = static_cast<std::int64_t>(total.best);
    if (total.counterexample) {
      report.status = Status::fail;
      report.witnesses = {to_graph6(*total.counterexample)};
      report.counts["counterexample_order"] = m;
      report.elapsed_ms = clock.elapsed_ms();
      return report;
    }
    extremal.push_back(to_graph6(*total.witness));
  }
  report.witnesses = std::move(extremal);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace mtf
