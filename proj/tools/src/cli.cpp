#include "hbell_cli/cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "format.hpp"

namespace hbell::cli {

std::vector<int> parse_exponents(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("bad exponent '" + token + "' in --f");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("--f is empty");
  return out;
}

CorrelationVector parse_correlation_vector(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("correlation vector must be a JSON array of [re, im] pairs");
  CorrelationVector xi;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw UsageError("each correlation entry must be a [re, im] pair of numbers");
    }
    xi.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return xi;
}

namespace {

template <typename T>
void override_from_env(const char* name, T& target) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  std::size_t used = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(value).size() || parsed == 0) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
  target = static_cast<T>(parsed);
}

}  // namespace

void apply_environment(RunConfig& config) {
  override_from_env("HBELL_ENUMERATION_LIMIT", config.enumeration_limit);
  override_from_env("HBELL_MATRIX_DIM_LIMIT", config.matrix_dim_limit);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    apply_environment(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Homogeneous Bell inequalities: enumeration, classification, facets and quantum violations",
               "hbell"};
  app.require_subcommand(1, 1);

  std::string convention = "raw";
  std::string output = "json";
  std::string scope = "all";
  std::string f_text;

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"pretty", OutputFormat::pretty}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", config.d, "outcomes per observable")->required()->check(CLI::Range(2, kMaxOrder));
    sub->add_option("--n", config.n, "number of parties")->required()->check(CLI::Range(0, 64));
    sub->add_option("--output", output, "json (JSON Lines), csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--parallelism", config.parallelism, "worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--enumeration-limit", config.enumeration_limit, "largest d^(d^n) to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--matrix-dim-limit", config.matrix_dim_limit, "largest dense operator dimension")
        ->check(CLI::PositiveNumber);
  };
  auto generator_flags = [&](CLI::App* sub) {
    sub->add_flag("--permutations", config.permutations, "include party permutations in the symmetry group");
    sub->add_flag("--conjugation", config.conjugation, "include complex conjugation in the symmetry group");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list every Bell polynomial of H_{d,n}");
  common(enumerate);
  generator_flags(enumerate);
  enumerate->add_flag("--orbits", config.orbits, "attach orbit ids and sizes");
  enumerate->add_option("--f", f_text, "a single function, as exponents of w");

  auto* classify = app.add_subcommand("classify", "orbit census under the symmetry group");
  common(classify);
  generator_flags(classify);
  classify->add_flag("--list", config.list, "one record per orbit");

  auto* violations = app.add_subcommand("violations", "rank functions by their largest quantum value");
  common(violations);
  generator_flags(violations);
  violations->add_option("--convention", convention, "raw or regauged (d = 3)")
      ->check(CLI::IsMember({"raw", "regauged"}));
  violations->add_option("--top", config.top, "rows to print (0 for all)");
  violations->add_option("--scope", scope, "all functions or orbit representatives")
      ->check(CLI::IsMember({"all", "orbits"}));
  violations->add_option("--f", f_text, "a single function, as exponents of w");

  auto* verify = app.add_subcommand("verify", "run the property suites");
  common(verify);
  generator_flags(verify);
  verify->add_option("--seed", config.seed, "seed for sampled checks");

  auto* member = app.add_subcommand("membership", "test a correlation vector against every facet");
  common(member);
  member->add_option("--input", config.input, "JSON array of [re, im] pairs, or - for stdin")->required();

  auto* matrix = app.add_subcommand("matrix", "print H_d^(x)n, or Q_f with --f");
  common(matrix);
  matrix->add_option("--f", f_text, "function exponents; prints Q_f");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::map<CLI::App*, Command> commands{{enumerate, Command::enumerate}, {classify, Command::classify},
                                              {violations, Command::violations}, {verify, Command::verify},
                                              {member, Command::membership}, {matrix, Command::matrix}};
  config.command = commands.at(app.get_subcommands().front());
  config.output = formats.at(output);
  config.convention = parse_convention(convention);
  config.scope = scope == "orbits" ? Scope::orbits : Scope::all;
  if (!f_text.empty()) {
    try {
      config.f = parse_exponents(f_text);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return execute(config, out, err);
}

}  // namespace hbell::cli
