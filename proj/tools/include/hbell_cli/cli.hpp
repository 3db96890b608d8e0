#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hbell/params.hpp"
#include "hbell/polytope.hpp"

namespace hbell::cli {

enum class Command { enumerate, classify, violations, verify, membership, matrix };
enum class OutputFormat { json, csv, pretty };
enum class Scope { all, orbits };

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::enumerate;
  int d = 3;
  int n = 1;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::size_t matrix_dim_limit = kDefaultMatrixDimLimit;
  Convention convention = Convention::raw;
  OutputFormat output = OutputFormat::json;
  unsigned parallelism = 1;
  std::uint64_t seed = 1;

  // command specific
  std::size_t top = 10;
  Scope scope = Scope::all;
  bool permutations = false;
  bool conjugation = false;
  bool orbits = false;
  bool list = false;
  std::optional<std::vector<int>> f;
  std::string input;
};

/// Raised for bad flags or inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "1,2,2" or "1 2 2" into exponents.
std::vector<int> parse_exponents(const std::string& text);

/// Parses a JSON array of [re, im] pairs.
CorrelationVector parse_correlation_vector(const std::string& json_text);

/// Applies HBELL_ENUMERATION_LIMIT / HBELL_MATRIX_DIM_LIMIT to the defaults.
void apply_environment(RunConfig& config);

/// Runs one configured command; returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbell::cli
