#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gals::cli {

enum class Mode {
  single_ga,
  iterated_ga,
  local_search,
  verify_lemma1,
  verify_prop1,
  plan_only,
  brute_force,
};

Mode mode_from_string(const std::string& name);
std::string to_string(Mode mode);

/// Invalid flag combination or value; reported as a usage error (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One experiment as configured from the command line and/or a flat
/// key-value config file (command line wins). Parameters come either from
/// the planner (r, with an optional m override) or fully manually
/// (--lambda/--k).
struct ExperimentConfig {
  Mode mode = Mode::plan_only;
  std::string problem;        // onemax | maxcut | maxsat
  std::string instance_path;  // maxcut/maxsat input file
  int n = 0;                  // onemax dimension

  double r = 0.5;
  std::optional<std::int64_t> m_override;
  std::optional<std::int64_t> lambda;  // manual parameter source (with k)
  std::optional<std::int64_t> k;

  std::string mutation = "neighbor";   // bitwise | neighbor
  std::optional<double> pm;            // bitwise rate; defaults to K/n
  std::string crossover = "identity";  // onepoint | identity
  double pc = 0.0;
  std::optional<double> s_override;        // certified constants, normally derived
  std::optional<double> epsilon_override;  // from the configured operators

  int runs = 200;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<std::int64_t> budget;  // single_ga iteration budget (default m)
  std::int64_t restarts = 1000;
  std::string rule = "best";  // local_search pivot rule: first | best

  std::string out;  // result file path; empty writes to stdout
  std::string format = "csv";
  bool timing = false;  // per-run wall time column (breaks byte-reproducibility)
};

/// Parses argv-style arguments (without the program name). Throws UsageError
/// on bad input; help requests return a config with help_requested set.
struct ParsedArgs {
  ExperimentConfig config;
  bool help_requested = false;
  std::string help_text;
};

ParsedArgs parse_args(const std::vector<std::string>& args);

}  // namespace gals::cli
