#include "mtf/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "mtf/constructions.hpp"
#include "mtf/enumeration.hpp"
#include "mtf/graph6.hpp"
#include "mtf/mis.hpp"
#include "mtf/random.hpp"
#include "mtf/reduction.hpp"

namespace mtf {

namespace {

using Check = std::function<VerificationReport()>;

struct NamedCheck {
  std::string name;
  Check run;
};

// Stream ids keep each randomized check on its own generator.
enum : std::uint64_t { kClaim1Stream = 1, kClaim2Stream = 2, kChainStream = 3, kKrStream = 4 };

constexpr int kEdgePercents[] = {30, 50, 80};

// Runs body(i) for i in [0, count) split across shards by i mod shards;
// returns the per-instance reports in index order.
std::vector<VerificationReport> run_sharded(int count, int shards,
                                            const std::function<VerificationReport(int)>& body) {
  std::vector<VerificationReport> out(static_cast<std::size_t>(count));
  std::vector<std::thread> workers;
  for (int s = 0; s < shards; ++s)
    workers.emplace_back([&, s] {
      for (int i = s; i < count; i += shards) {
        try {
          out[i] = body(i);
        } catch (const std::exception& e) {
          out[i].fail(std::string("error: ") + e.what());
        }
      }
    });
  for (auto& w : workers) w.join();
  return out;
}

ReductionInstance seeded_instance(const RunConfig& config, std::uint64_t stream, int index, int lo, int hi) {
  CounterRng rng = CounterRng(config.seed, stream).split(static_cast<std::uint64_t>(index));
  const int n = rng.uniform_int(lo, hi);
  return random_instance(rng, n, kEdgePercents[index % 3]);
}

VerificationReport random_claim_check(const RunConfig& config, const std::string& name, std::uint64_t stream,
                                      int count, int max_n,
                                      const std::function<VerificationReport(const ReductionInstance&)>& check) {
  VerificationReport report;
  report.check_name = name;
  report.parameters["seed"] = std::to_string(config.seed);
  report.parameters["max_n"] = std::to_string(max_n);
  report.parameters["edge_percent"] = "30,50,80";
  const auto per = run_sharded(count, config.shards, [&](int i) {
    return check(seeded_instance(config, stream, i, 3, max_n));
  });
  std::int64_t failures = 0;
  std::map<std::string, std::int64_t> maxima;
  std::map<std::string, std::int64_t> minima;
  std::map<std::string, std::int64_t> totals;
  for (int i = 0; i < count; ++i) {
    const auto& r = per[i];
    if (!r.passed()) {
      if (++failures == 1) {
        report.fail("instance " + std::to_string(i) + ": " +
                    instance_to_json(seeded_instance(config, stream, i, 3, max_n)).dump());
        for (const auto& w : r.witnesses) report.witnesses.push_back(w);
      }
      continue;
    }
    for (const auto& [key, value] : r.counts) {
      if (key == "t_vertices" || key == "max_h") {
        auto [it, fresh] = maxima.try_emplace("max_" + (key == "max_h" ? std::string("h") : key), value);
        if (!fresh) it->second = std::max(it->second, value);
      } else if (key == "slack") {
        auto [it, fresh] = minima.try_emplace("min_slack", value);
        if (!fresh) it->second = std::min(it->second, value);
      } else if (key == "t_edges" || key == "h_count" || key == "sum_h") {
        totals[key == "t_edges" ? "total_t_edges" : "total_h"] += value;
      }
    }
  }
  report.counts["instances"] = count;
  report.counts["failures"] = failures;
  for (const auto* part : {&maxima, &minima, &totals}) report.counts.insert(part->begin(), part->end());
  return report;
}

void add_claims(const RunConfig& config, std::vector<NamedCheck>& checks) {
  checks.push_back({"claim1_worked_k4", [] {
                      auto r = verify_claim1(build_auxiliary(worked_k4_instance()));
                      r.check_name = "claim1_worked_k4";
                      r.require(r.counts["t_vertices"] == 4 && r.counts["t_edges"] == 2,
                                "worked K4 instance: T should be a 2-edge matching on 4 vertices");
                      return r;
                    }});
  checks.push_back({"claim1_random", [config] {
                      const int max_n = std::min(10, config.guard("reduction_n"));
                      return random_claim_check(config, "claim1_random", kClaim1Stream,
                                                config.guard("claim1_instances"), max_n,
                                                [](const ReductionInstance& inst) {
                                                  return verify_claim1(build_auxiliary(inst));
                                                });
                    }});
  checks.push_back({"claim2_worked_k4", [config] {
                      auto r = verify_claim2(worked_k4_instance(), config.guard("reduction_n"));
                      r.check_name = "claim2_worked_k4";
                      r.require(r.counts["h_count"] == 2 && r.counts["mis_count_t"] == 4,
                                "worked K4 instance: expected |H(F*)|=2 and mis_count(T)=4");
                      return r;
                    }});
  checks.push_back({"claim2_random", [config] {
                      const int guard = config.guard("reduction_n");
                      return random_claim_check(config, "claim2_random", kClaim2Stream,
                                                config.guard("claim2_instances"), std::min(8, guard),
                                                [guard](const ReductionInstance& inst) {
                                                  return verify_claim2(inst, guard);
                                                });
                    }});
  checks.push_back({"bound_chain_worked_k4", [config] {
                      const auto k4 = worked_k4_instance();
                      auto r = bound_chain(k4.container, k4.removal, std::min(8, config.guard("reduction_n")),
                                           config.guard("removal_edges"));
                      r.check_name = "bound_chain_worked_k4";
                      r.require(r.counts["sum_h"] == 7 && r.counts["total_maximal_subgraphs"] == 7,
                                "worked K4 instance: partition should sum to 7");
                      return r;
                    }});
  checks.push_back({"bound_chain_random", [config] {
                      const int order_guard = std::min(8, config.guard("reduction_n"));
                      const int removal_guard = config.guard("removal_edges");
                      return random_claim_check(
                          config, "bound_chain_random", kChainStream, config.guard("chain_instances"), order_guard,
                          [order_guard, removal_guard](const ReductionInstance& inst) {
                            // Thin the container until its greedy removal set fits the guard.
                            Graph container = inst.container;
                            EdgeSet removal = inst.removal;
                            while (removal.size() > static_cast<std::size_t>(removal_guard)) {
                              const Edge e = removal.edges().back();
                              container.remove_edge(e.u, e.v);
                              removal = greedy_triangle_removal(container);
                            }
                            return bound_chain(container, removal, order_guard, removal_guard);
                          });
                    }});
}

void add_hujter_tuza(const RunConfig& config, std::vector<NamedCheck>& checks) {
  checks.push_back({"hujter_tuza", [config] {
                      const int m = config.guard("hujter_tuza_m");
                      return verify_hujter_tuza(m, config.shards, m);
                    }});
  checks.push_back({"hujter_tuza_matching_equality", [config] {
                      VerificationReport r;
                      r.check_name = "hujter_tuza_matching_equality";
                      const int max_k = std::min(4, config.guard("hujter_tuza_m") / 2);
                      for (int k = 1; k <= max_k; ++k) {
                        Graph g(2 * k);
                        for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
                        const std::uint64_t count = mis_count(g);
                        r.counts["mis_count_k" + std::to_string(k)] = static_cast<std::int64_t>(count);
                        r.require(count == (std::uint64_t{1} << k),
                                  "perfect matching on " + std::to_string(2 * k) + " vertices: " + to_graph6(g));
                      }
                      return r;
                    }});
}

void add_constructions(const RunConfig& config, std::vector<NamedCheck>& checks) {
  const int folklore_limit = config.guard("folklore_n");
  for (int n = 4; n <= std::min(12, folklore_limit); n += 4)
    checks.push_back({"folklore_family_stats_n" + std::to_string(n),
                      [config, n, folklore_limit] { return folklore_family_stats(n, config.shards, folklore_limit); }});

  checks.push_back({"folklore_maximal_fraction", [config, folklore_limit] {
                      VerificationReport r;
                      r.check_name = "folklore_maximal_fraction";
                      std::vector<Rational> fractions;
                      for (int n = 4; n <= std::min(12, folklore_limit); n += 4) {
                        const auto stats = folklore_family_stats(n, config.shards, folklore_limit);
                        const Rational f(stats.counts.at("maximal"), stats.counts.at("total"));
                        r.parameters["fraction_n" + std::to_string(n)] = f.to_string();
                        fractions.push_back(f);
                      }
                      if (!fractions.empty()) r.require(fractions[0] == Rational(1, 2), "n=4 fraction is not 1/2");
                      for (std::size_t i = 2; i < fractions.size(); ++i)
                        r.require(fractions[i - 1] <= fractions[i], "maximal fraction decreases between n=" +
                                                                         std::to_string(4 * i) + " and n=" +
                                                                         std::to_string(4 * i + 4));
                      return r;
                    }});

  checks.push_back({"kr_entropy_identity", [] {
                      VerificationReport r;
                      r.check_name = "kr_entropy_identity";
                      std::int64_t cases = 0;
                      for (int rr = 2; rr <= 8; ++rr)
                        for (int n = 2 * rr; n <= 64; n += 2 * rr) {
                          ++cases;
                          const auto e = kr_entropy_check(n, rr);
                          r.require(e.matches(), "n=" + std::to_string(n) + " r=" + std::to_string(rr) + ": " +
                                                     e.choice_bits.to_string() + " != " + e.closed_form.to_string());
                        }
                      r.counts["cases"] = cases;
                      return r;
                    }});

  checks.push_back({"kr_r2_matches_folklore", [] {
                      VerificationReport r;
                      r.check_name = "kr_r2_matches_folklore";
                      const int n = 8;
                      for (std::uint64_t c = 0; c < 256; ++c) {
                        FolkloreChoice f = FolkloreChoice::zeros(n);
                        KrChoice k = KrChoice::zeros(n, 2);
                        for (int j = 0; j < 8; ++j) f.bits[j] = k.vertex_choices[j] = (c >> j) & 1U;
                        r.require(kr_free_graph(k) == folklore_graph(f), "choice " + std::to_string(c));
                      }
                      r.counts["choices"] = 256;
                      return r;
                    }});

  checks.push_back({"kr_exhaustive_small", [] {
                      VerificationReport r;
                      r.check_name = "kr_exhaustive_small";
                      for (const auto& [n, rr] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{8, 2}}) {
                        const std::size_t pairs = KrChoice::pair_count(n, rr);
                        const std::size_t bits = 2 * pairs + KrChoice::vertex_count(n, rr);
                        std::int64_t maximal = 0;
                        for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits); ++c) {
                          KrChoice k = KrChoice::zeros(n, rr);
                          for (std::size_t i = 0; i < pairs; ++i) k.pair_choices[i] = (c >> (2 * i)) & 3U;
                          for (std::size_t i = 0; i < k.vertex_choices.size(); ++i)
                            k.vertex_choices[i] = (c >> (2 * pairs + i)) & 1U;
                          const Graph g = kr_free_graph(k);
                          r.require(!has_clique(g, rr + 1), "K_{r+1} in " + to_graph6(g));
                          if (rr == 2 && is_maximal_triangle_free(g)) ++maximal;
                        }
                        const std::string tag = "_n" + std::to_string(n) + "_r" + std::to_string(rr);
                        r.counts["choices" + tag] = std::int64_t{1} << bits;
                        if (rr == 2) r.counts["maximal" + tag] = maximal;
                      }
                      return r;
                    }});

  for (const auto& [n, rr] : {std::pair{12, 3}, std::pair{16, 4}}) {
    const std::string name = "kr_samples_n" + std::to_string(n) + "_r" + std::to_string(rr);
    checks.push_back({name, [config, n, rr, name] {
                        VerificationReport r;
                        r.check_name = name;
                        r.parameters["seed"] = std::to_string(config.seed);
                        const int samples = config.guard("kr_samples");
                        const CounterRng base(config.seed, kKrStream + static_cast<std::uint64_t>(rr));
                        std::int64_t clique_free = 0;
                        for (int i = 0; i < samples; ++i) {
                          CounterRng rng = base.split(static_cast<std::uint64_t>(i));
                          KrChoice k = KrChoice::zeros(n, rr);
                          for (auto& p : k.pair_choices) p = static_cast<std::uint8_t>(rng.uniform(4));
                          for (auto& v : k.vertex_choices) v = static_cast<std::uint8_t>(rng.uniform(2));
                          const Graph g = kr_free_graph(k);
                          if (!has_clique(g, rr + 1)) ++clique_free;
                          else r.fail("K_{r+1} in " + to_graph6(g));
                        }
                        r.counts["samples"] = samples;
                        r.counts["clique_free"] = clique_free;
                        return r;
                      }});
  }
}

void add_enumeration(const RunConfig& config, std::vector<NamedCheck>& checks) {
  checks.push_back({"enumeration_oracle_equivalence", [config] {
                      VerificationReport r;
                      r.check_name = "enumeration_oracle_equivalence";
                      const int limit = config.guard("oracle_n");
                      EnumerateOptions options;
                      options.shards = config.shards;
                      options.guard = std::max(limit, config.guard("enumeration_n"));
                      for (int n = 1; n <= limit; ++n) {
                        const auto oracle = brute_force_maximal_tf(n, limit);
                        options.collect = true;
                        const auto fast = enumerate_maximal_tf(n, options);
                        r.counts["count_n" + std::to_string(n)] = static_cast<std::int64_t>(fast.row.labeled_count);
                        r.require(fast.row.labeled_count == oracle.size() && fast.graphs == oracle,
                                  "n=" + std::to_string(n) + ": search " + std::to_string(fast.row.labeled_count) +
                                      " vs oracle " + std::to_string(oracle.size()));
                      }
                      constexpr std::uint64_t kFixed[] = {0, 1, 1, 3, 7};
                      for (int n = 2; n <= std::min(4, limit); ++n)
                        r.require(r.counts["count_n" + std::to_string(n)] == static_cast<std::int64_t>(kFixed[n]),
                                  "n=" + std::to_string(n) + " differs from the pinned value");
                      return r;
                    }});

  checks.push_back({"growth_table", [config] {
                      VerificationReport r;
                      r.check_name = "growth_table";
                      EnumerateOptions options;
                      options.shards = config.shards;
                      options.guard = config.guard("enumeration_n");
                      const auto table = growth_table(options.guard, options);
                      const auto json = table_to_json(table, false);
                      for (const auto& row : json["rows"]) {
                        const std::string n = std::to_string(row["n"].get<int>());
                        r.counts["count_n" + n] = row["labeled_count"].get<std::int64_t>();
                        r.parameters["log2_count_over_n2_n" + n] = row["log2_count_over_n2"].get<std::string>();
                      }
                      const int oracle = std::min(config.guard("oracle_n"), options.guard);
                      for (int n = 1; n <= oracle; ++n)
                        r.require(table.rows[n - 1].labeled_count == brute_force_maximal_tf(n, oracle).size(),
                                  "row n=" + std::to_string(n) + " disagrees with the brute-force oracle");
                      return r;
                    }});

  checks.push_back({"enumeration_search_order_invariance", [config] {
                      VerificationReport r;
                      r.check_name = "enumeration_search_order_invariance";
                      const int n = std::min(7, config.guard("enumeration_n"));
                      std::vector<int> identity(static_cast<std::size_t>(n));
                      std::iota(identity.begin(), identity.end(), 0);
                      std::vector<int> reversed(identity.rbegin(), identity.rend());
                      std::vector<int> shuffled = identity;
                      CounterRng(config.seed, 0).shuffle(shuffled);
                      EnumerateOptions options;
                      options.shards = config.shards;
                      options.guard = config.guard("enumeration_n");
                      std::vector<std::uint64_t> counts;
                      for (const auto* order : {&identity, &reversed, &shuffled}) {
                        options.vertex_order = *order;
                        counts.push_back(enumerate_maximal_tf(n, options).row.labeled_count);
                      }
                      r.parameters["n"] = std::to_string(n);
                      r.counts["count_identity"] = static_cast<std::int64_t>(counts[0]);
                      r.counts["count_reversed"] = static_cast<std::int64_t>(counts[1]);
                      r.counts["count_shuffled"] = static_cast<std::int64_t>(counts[2]);
                      r.require(counts[0] == counts[1] && counts[1] == counts[2], "counts depend on search order");
                      return r;
                    }});

  checks.push_back({"remark3_fraction", [config] {
                      VerificationReport r;
                      r.check_name = "remark3_fraction";
                      const int limit = std::min(kDefaultCensusLimit, config.guard("enumeration_n"));
                      for (int n = 1; n <= limit; ++n) {
                        const auto census = remark3_fraction(n, limit, config.shards);
                        const std::string tag = "_n" + std::to_string(n);
                        r.counts["admitting" + tag] = static_cast<std::int64_t>(census.admitting);
                        r.counts["total" + tag] = static_cast<std::int64_t>(census.total);
                        r.parameters["fraction" + tag] =
                            std::to_string(census.admitting) + "/" + std::to_string(census.total);
                      }
                      return r;
                    }});

  checks.push_back({"mantel_density", [] {
                      VerificationReport r;
                      r.check_name = "mantel_density";
                      std::int64_t cases = 0;
                      for (int n = 1; n <= kMaxDensityScanOrder; ++n)
                        for (int m = 0; m <= n * (n - 1) / 2; ++m) {
                          ++cases;
                          const bool zero = min_triangles_at_density(n, m) == 0;
                          r.require(zero == (m <= n * n / 4),
                                    "n=" + std::to_string(n) + " m=" + std::to_string(m));
                        }
                      r.counts["cases"] = cases;
                      return r;
                    }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"claims", "hujter-tuza", "constructions", "enumeration", "all"};
  return names;
}

std::vector<VerificationReport> run_suite(const RunConfig& config, std::string_view suite) {
  if (config.shards < 1) throw Error("shards must be positive");
  std::vector<NamedCheck> checks;
  const bool all = suite == "all";
  if (all || suite == "claims") add_claims(config, checks);
  if (all || suite == "hujter-tuza") add_hujter_tuza(config, checks);
  if (all || suite == "constructions") add_constructions(config, checks);
  if (all || suite == "enumeration") add_enumeration(config, checks);
  if (checks.empty()) throw Error("unknown suite '" + std::string(suite) + "'");

  std::vector<VerificationReport> reports;
  for (const auto& check : checks) {
    Stopwatch clock;
    VerificationReport report;
    try {
      report = check.run();
    } catch (const std::exception& e) {
      report = VerificationReport{};
      report.fail(std::string("error: ") + e.what());
    }
    report.check_name = check.name;
    report.elapsed_ms = clock.elapsed_ms();
    reports.push_back(std::move(report));
  }
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.check_name < b.check_name; });
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

}  // namespace mtf
