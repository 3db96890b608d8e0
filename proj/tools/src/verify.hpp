#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hbell_cli/cli.hpp"

namespace hbell::cli {

enum class SuiteStatus { pass, fail, skipped };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string mode;              // exhaustive, sampled or empty
  std::uint64_t checked = 0;
  std::string note;
  nlohmann::ordered_json witness;        // first counterexample when failed
};

std::string to_string(SuiteStatus s);

std::vector<SuiteResult> run_verification(const RunConfig& config);

}  // namespace hbell::cli
