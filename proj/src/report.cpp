#include "mtf/report.hpp"

#include <charconv>
#include <sstream>

#include "mtf/graph.hpp"

namespace mtf {

void VerificationReport::fail(std::string witness) {
  status = Status::fail;
  witnesses.push_back(std::move(witness));
}

void VerificationReport::require(bool ok, std::string_view witness) {
  if (!ok) fail(std::string(witness));
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check_name", r.check_name},
                     {"status", r.passed() ? "pass" : "fail"},
                     {"parameters", r.parameters},
                     {"counts", r.counts},
                     {"witnesses", r.witnesses},
                     {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("check_name").get_to(r.check_name);
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw Error("unknown report status '" + status + "'");
  r.status = status == "pass" ? Status::pass : Status::fail;
  j.at("parameters").get_to(r.parameters);
  j.at("counts").get_to(r.counts);
  j.at("witnesses").get_to(r.witnesses);
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
  if (r.status == Status::fail && r.witnesses.empty())
    throw Error("report '" + r.check_name + "' fails without a witness");
}

std::string reports_to_json(std::span<const VerificationReport> reports, bool include_timing) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j = r;
    if (!include_timing) j.erase("elapsed_ms");
    array.push_back(std::move(j));
  }
  return array.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("report JSON: ") + e.what());
  }
  if (!parsed.is_array()) throw Error("report JSON must be an array");
  return parsed.get<std::vector<VerificationReport>>();
}

std::string summarize(std::span<const VerificationReport> reports) {
  std::ostringstream out;
  std::size_t failed = 0;
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.check_name.size());
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.check_name << std::string(width - r.check_name.size() + 2, ' ');
    bool first = true;
    for (const auto& [key, value] : r.counts) {
      out << (first ? "" : " ") << key << "=" << value;
      first = false;
    }
    out << "  (" << r.elapsed_ms << " ms)\n";
    if (!r.passed())
      for (const auto& w : r.witnesses) out << "      witness: " << w << "\n";
  }
  out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  return out.str();
}

const std::map<std::string, int>& RunConfig::default_guards() {
  static const std::map<std::string, int> defaults{
      {"oracle_n", 6},          {"enumeration_n", 9},      {"hujter_tuza_m", 8},
      {"folklore_n", 12},       {"reduction_n", 10},       {"removal_edges", 12},
      {"partition_n", 24},      {"claim1_instances", 1000}, {"claim2_instances", 1000},
      {"chain_instances", 100}, {"kr_samples", 1000},
  };
  return defaults;
}

int RunConfig::guard(const std::string& key) const {
  if (auto it = guards.find(key); it != guards.end()) return it->second;
  const auto& defaults = default_guards();
  if (auto it = defaults.find(key); it != defaults.end()) return it->second;
  throw Error("unknown guard '" + key + "'");
}

void RunConfig::set_guard(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw Error("guard must be KEY=VAL, got '" + std::string(assignment) + "'");
  const std::string key(assignment.substr(0, eq));
  if (!default_guards().contains(key)) throw Error("unknown guard '" + key + "'");
  int value = 0;
  const auto rest = assignment.substr(eq + 1);
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr != rest.data() + rest.size() || value < 0)
    throw Error("guard '" + key + "' needs a nonnegative integer");
  guards[key] = value;
}

}  // namespace mtf
