// mtf: command-line front end for the maximal triangle-free toolkit.
//
//   mtf construct folklore --n 8 --choice 3f
//   mtf construct kr --n 12 --r 3 --samples 10 --stream out.g6
//   mtf enumerate --n 7 --table --json table.json
//   mtf mis --graph 'C~' --list
//   mtf reduce --instance inst.json --check claim1,claim2,chain
//   mtf verify --suite all --seed 1 --shards 4 --json report.json
//   mtf report --json report.json
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mtf/constructions.hpp"
#include "mtf/enumeration.hpp"
#include "mtf/graph6.hpp"
#include "mtf/mis.hpp"
#include "mtf/reduction.hpp"
#include "mtf/suite.hpp"

namespace {

struct CommonOptions {
  std::uint64_t seed = 1;
  int shards = 1;
  std::vector<std::string> guards;
  std::string json_path;
  std::string stream_path;
};

void add_common(CLI::App* app, CommonOptions& opts) {
  app->add_option("--seed", opts.seed, "64-bit seed for randomized checks")->envname("MTF_SEED");
  app->add_option("--shards", opts.shards, "worker shards")->envname("MTF_SHARDS")->check(CLI::PositiveNumber);
  app->add_option("--guard", opts.guards, "size cap override KEY=VAL (repeatable)")
      ->envname("MTF_GUARDS")
      ->delimiter(',');
  app->add_option("--json", opts.json_path, "JSON output path");
}

mtf::RunConfig make_config(const CommonOptions& opts) {
  mtf::RunConfig config;
  config.seed = opts.seed;
  config.shards = opts.shards;
  config.output_path = opts.json_path;
  for (const auto& g : opts.guards) config.set_guard(g);
  for (const auto& [key, value] : config.guards) {
    const int fallback = mtf::RunConfig::default_guards().at(key);
    if (value > fallback)
      std::cerr << "warning: guard " << key << " raised from " << fallback << " to " << value
                << "; runtime may grow sharply\n";
  }
  return config;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw mtf::Error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mtf::Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit_reports(const std::vector<mtf::VerificationReport>& reports, const std::string& json_path) {
  std::cout << mtf::summarize(reports);
  if (!json_path.empty()) write_text(json_path, mtf::reports_to_json(reports));
  return mtf::all_passed(reports) ? 0 : 1;
}

mtf::Graph read_one_graph(const std::string& graph6, const std::string& input) {
  if (!graph6.empty()) return mtf::from_graph6(graph6);
  const auto graphs = mtf::read_graph6_file(input);
  if (graphs.empty()) throw mtf::Error(input + " holds no graphs");
  return graphs.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal triangle-free graph toolkit"};
  app.require_subcommand(1);

  // construct
  CommonOptions construct_opts;
  std::string kind;
  int n = 0;
  int r = 2;
  std::string choice_hex;
  std::string graph_text;
  int samples = 0;
  auto* construct = app.add_subcommand("construct", "build folklore / K_{r+1}-free family members");
  construct->add_option("kind", kind, "folklore | kr | partition")->required()->check(
      CLI::IsMember({"folklore", "kr", "partition"}));
  construct->add_option("--n", n, "vertex count");
  construct->add_option("--r", r, "class count for kr");
  construct->add_option("--choice", choice_hex, "choice vector as hex (bit k = choice k)");
  construct->add_option("--samples", samples, "random kr members to stream");
  construct->add_option("--graph", graph_text, "graph6 input for partition");
  construct->add_option("--stream", construct_opts.stream_path, "write members as graph6");
  add_common(construct, construct_opts);

  // enumerate
  CommonOptions enum_opts;
  int enum_n = 0;
  bool table_mode = false;
  auto* enumerate = app.add_subcommand("enumerate", "count labeled maximal triangle-free graphs");
  enumerate->add_option("--n", enum_n, "vertex count")->required();
  enumerate->add_flag("--table", table_mode, "emit the growth table for 1..n");
  enumerate->add_option("--stream", enum_opts.stream_path, "write the graphs on n vertices as graph6");
  add_common(enumerate, enum_opts);

  // mis
  CommonOptions mis_opts;
  std::string mis_graph;
  std::string mis_input;
  bool mis_list = false;
  bool mis_verify = false;
  int mis_n = 0;
  auto* mis = app.add_subcommand("mis", "maximal independent sets");
  mis->add_option("--graph", mis_graph, "graph6 string");
  mis->add_option("--input", mis_input, "graph6 file (first graph)");
  mis->add_flag("--list", mis_list, "print every set as a vertex list");
  mis->add_flag("--verify", mis_verify, "exhaustive Hujter-Tuza check up to --n");
  mis->add_option("--n", mis_n, "largest order for --verify");
  add_common(mis, mis_opts);

  // reduce
  CommonOptions reduce_opts;
  std::string instance_path;
  std::string reduce_checks = "claim1,claim2,chain";
  int reduce_n = 6;
  int edge_percent = 50;
  auto* reduce = app.add_subcommand("reduce", "run the reduction pipeline on one instance");
  reduce->add_option("--instance", instance_path, "instance JSON (random instance from --seed if absent)");
  reduce->add_option("--check", reduce_checks, "comma list of claim1, claim2, chain");
  reduce->add_option("--n", reduce_n, "order of the random instance");
  reduce->add_option("--edge-percent", edge_percent, "edge probability of the random instance")->check(
      CLI::Range(0, 100));
  add_common(reduce, reduce_opts);

  // verify
  CommonOptions verify_opts;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "claims | hujter-tuza | constructions | enumeration | all");
  add_common(verify, verify_opts);

  // report
  std::string report_path;
  auto* report = app.add_subcommand("report", "summarize a saved JSON report");
  report->add_option("--json", report_path, "report JSON to read")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*construct) {
      const auto config = make_config(construct_opts);
      if (kind == "partition") {
        const mtf::Graph g = mtf::from_graph6(graph_text);
        const auto x = mtf::check_matching_partition(g, config.guard("partition_n"));
        if (!x) {
          std::cout << "none\n";
        } else {
          std::cout << "X =";
          for (int v = 0; v < g.order(); ++v)
            if ((*x >> v) & 1U) std::cout << ' ' << v;
          std::cout << "\n";
        }
        return 0;
      }
      if (kind == "folklore") {
        if (!choice_hex.empty()) {
          const mtf::Graph g = mtf::folklore_graph(mtf::FolkloreChoice::from_hex(n, choice_hex));
          std::cout << mtf::to_graph6(g) << "  triangle_free=" << mtf::is_triangle_free(g)
                    << " maximal=" << mtf::is_maximal_triangle_free(g) << "\n";
          return 0;
        }
        const int guard = config.guard("folklore_n");
        if (!construct_opts.stream_path.empty()) {
          if (n > guard) throw mtf::GuardViolation("folklore stream: n exceeds guard folklore_n");
          const int k = n * n / 8;
          std::ofstream out(construct_opts.stream_path);
          auto choice = mtf::FolkloreChoice::zeros(n);
          for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
            for (int j = 0; j < k; ++j) choice.bits[j] = (c >> j) & 1U;
            out << mtf::to_graph6(mtf::folklore_graph(choice)) << '\n';
          }
        }
        return emit_reports({mtf::folklore_family_stats(n, config.shards, guard)}, construct_opts.json_path);
      }
      // kr
      if (!choice_hex.empty()) {
        const mtf::Graph g = mtf::kr_free_graph(mtf::KrChoice::from_hex(n, r, choice_hex));
        std::cout << mtf::to_graph6(g) << "  clique_free=" << !mtf::has_clique(g, r + 1) << "\n";
        return 0;
      }
      const auto entropy = mtf::kr_entropy_check(n, r);
      std::cout << "log2(#choices) = " << entropy.choice_bits.to_string()
                << ", (1-1/r) n^2/4 = " << entropy.closed_form.to_string() << (entropy.matches() ? "  equal\n" : "  DIFFER\n");
      if (samples > 0 && !construct_opts.stream_path.empty()) {
        std::ofstream out(construct_opts.stream_path);
        const mtf::CounterRng base(config.seed, 0);
        for (int i = 0; i < samples; ++i) {
          auto rng = base.split(static_cast<std::uint64_t>(i));
          auto choice = mtf::KrChoice::zeros(n, r);
          for (auto& p : choice.pair_choices) p = static_cast<std::uint8_t>(rng.uniform(4));
          for (auto& v : choice.vertex_choices) v = static_cast<std::uint8_t>(rng.uniform(2));
          out << mtf::to_graph6(mtf::kr_free_graph(choice)) << '\n';
        }
      }
      return entropy.matches() ? 0 : 1;
    }

    if (*enumerate) {
      const auto config = make_config(enum_opts);
      mtf::EnumerateOptions options;
      options.shards = config.shards;
      options.guard = config.guard("enumeration_n");
      mtf::CountTable table;
      if (table_mode) {
        table = mtf::growth_table(enum_n, options);
      }
      if (!table_mode || !enum_opts.stream_path.empty()) {
        options.collect = !enum_opts.stream_path.empty();
        auto result = mtf::enumerate_maximal_tf(enum_n, options);
        if (!table_mode) table.rows.push_back(result.row);
        if (options.collect) mtf::write_graph6_file(enum_opts.stream_path, result.graphs);
      }
      std::cout << mtf::table_to_text(table);
      if (!enum_opts.json_path.empty()) write_text(enum_opts.json_path, mtf::table_to_json(table).dump(2) + "\n");
      return 0;
    }

    if (*mis) {
      const auto config = make_config(mis_opts);
      if (mis_verify) {
        const int guard = config.guard("hujter_tuza_m");
        return emit_reports({mtf::verify_hujter_tuza(mis_n ? mis_n : guard, config.shards, guard)},
                            mis_opts.json_path);
      }
      const mtf::Graph g = read_one_graph(mis_graph, mis_input);
      if (mis_list) {
        const auto family = mtf::enumerate_mis(g);
        for (mtf::Word set : family.sets) {
          std::cout << "{";
          bool first = true;
          for (int v = 0; v < g.order(); ++v)
            if ((set >> v) & 1U) {
              std::cout << (first ? "" : ",") << v;
              first = false;
            }
          std::cout << "}\n";
        }
      }
      const std::uint64_t count = mtf::mis_count(g);
      std::cout << "mis_count=" << count << " order=" << g.order()
                << " triangle_free=" << mtf::is_triangle_free(g)
                << " within_2^(n/2)=" << mtf::within_mis_bound(count, g.order()) << "\n";
      return 0;
    }

    if (*reduce) {
      const auto config = make_config(reduce_opts);
      mtf::ReductionInstance inst;
      if (!instance_path.empty()) {
        inst = mtf::instance_from_json(nlohmann::json::parse(read_text(instance_path)));
      } else {
        mtf::CounterRng rng(config.seed, 0);
        inst = mtf::random_instance(rng, reduce_n, edge_percent);
        std::cout << "instance: " << mtf::instance_to_json(inst).dump() << "\n";
      }
      std::vector<mtf::VerificationReport> reports;
      std::stringstream list(reduce_checks);
      for (std::string check; std::getline(list, check, ',');) {
        if (check == "claim1") reports.push_back(mtf::verify_claim1(mtf::build_auxiliary(inst)));
        else if (check == "claim2") reports.push_back(mtf::verify_claim2(inst, config.guard("reduction_n")));
        else if (check == "chain")
          reports.push_back(mtf::bound_chain(inst.container, inst.removal, std::min(8, config.guard("reduction_n")),
                                             config.guard("removal_edges")));
        else throw mtf::Error("unknown check '" + check + "'");
      }
      return emit_reports(reports, reduce_opts.json_path);
    }

    if (*verify) {
      const auto config = make_config(verify_opts);
      return emit_reports(mtf::run_suite(config, suite), verify_opts.json_path);
    }

    if (*report) {
      const auto reports = mtf::reports_from_json(read_text(report_path));
      std::cout << mtf::summarize(reports);
      return mtf::all_passed(reports) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
