#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mtf {

enum class Status { pass, fail };

// Uniform result record for every check. A failing report always carries at
// least one witness.
struct VerificationReport {
  std::string check_name;
  Status status = Status::pass;
  std::map<std::string, std::string> parameters;
  std::map<std::string, std::int64_t> counts;
  std::vector<std::string> witnesses;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::pass; }
  void fail(std::string witness);
  // Fails with `witness` unless `ok`.
  void require(bool ok, std::string_view witness);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

std::string reports_to_json(std::span<const VerificationReport> reports, bool include_timing = true);
std::vector<VerificationReport> reports_from_json(std::string_view text);
std::string summarize(std::span<const VerificationReport> reports);

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Size caps for the exhaustive checks. Keys and defaults:
//   oracle_n=6  enumeration_n=9  hujter_tuza_m=8  folklore_n=12
//   reduction_n=10  removal_edges=12  partition_n=24
//   claim1_instances=1000  claim2_instances=1000  chain_instances=100
//   kr_samples=1000
struct RunConfig {
  std::uint64_t seed = 1;
  int shards = 1;
  std::map<std::string, int> guards;
  std::string output_path;

  static const std::map<std::string, int>& default_guards();
  int guard(const std::string& key) const;
  // Parses "KEY=VAL"; unknown keys are rejected.
  void set_guard(std::string_view assignment);
};

}  // namespace mtf
