#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtf/report.hpp"

namespace mtf {

// claims, hujter-tuza, constructions, enumeration, all
const std::vector<std::string>& suite_names();

// Reports are sorted by check name. A check that throws (e.g. a guard
// violation) yields a failing report instead of aborting the run. Unknown
// suite names throw Error.
std::vector<VerificationReport> run_suite(const RunConfig& config, std::string_view suite);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace mtf
