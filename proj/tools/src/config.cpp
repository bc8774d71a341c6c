#include "config.hpp"

#include <CLI11.hpp>

namespace gals::cli {

Mode mode_from_string(const std::string& name) {
  if (name == "single_ga") return Mode::single_ga;
  if (name == "iterated_ga") return Mode::iterated_ga;
  if (name == "local_search") return Mode::local_search;
  if (name == "verify_lemma1") return Mode::verify_lemma1;
  if (name == "verify_prop1") return Mode::verify_prop1;
  if (name == "plan_only") return Mode::plan_only;
  if (name == "brute_force") return Mode::brute_force;
  throw UsageError("unknown mode '" + name + "'");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::single_ga: return "single_ga";
    case Mode::iterated_ga: return "iterated_ga";
    case Mode::local_search: return "local_search";
    case Mode::verify_lemma1: return "verify_lemma1";
    case Mode::verify_prop1: return "verify_prop1";
    case Mode::plan_only: return "plan_only";
    case Mode::brute_force: return "brute_force";
  }
  return "?";
}

ParsedArgs parse_args(const std::vector<std::string>& args) {
  ParsedArgs parsed;
  ExperimentConfig& cfg = parsed.config;

  CLI::App app{"Non-elitist tournament GA harness: planner, runner and statistical verifier"};
  app.set_config("--config", "", "Flat key=value config file; explicit flags win");

  std::string mode = "plan_only";
  app.add_option("--mode", mode,
                 "single_ga | iterated_ga | local_search | verify_lemma1 | verify_prop1 | "
                 "plan_only | brute_force")
      ->check(CLI::IsMember({"single_ga", "iterated_ga", "local_search", "verify_lemma1",
                             "verify_prop1", "plan_only", "brute_force"}));
  app.add_option("--problem", cfg.problem, "onemax | maxcut | maxsat")
      ->check(CLI::IsMember({"onemax", "maxcut", "maxsat"}));
  app.add_option("--instance", cfg.instance_path, "Instance file (maxcut edge list / maxsat DIMACS)");
  app.add_option("--n", cfg.n, "Dimension for --problem onemax");

  app.add_option("--r", cfg.r, "Tournament ratio r (planner: k = ceil(r*lambda))");
  auto* m_opt = app.add_option("--m", "Override m (defaults to exact count when n <= 24, "
                                      "otherwise the declared bound)");
  auto* lambda_opt = app.add_option("--lambda", "Population size (manual parameter source)");
  auto* k_opt = app.add_option("--k", "Tournament size (manual parameter source)");

  app.add_option("--mutation", cfg.mutation, "bitwise | neighbor")
      ->check(CLI::IsMember({"bitwise", "neighbor"}));
  auto* pm_opt = app.add_option("--pm", "Bitwise mutation rate (default K/n)");
  app.add_option("--crossover", cfg.crossover, "onepoint | identity")
      ->check(CLI::IsMember({"onepoint", "identity"}));
  app.add_option("--pc", cfg.pc, "Single-point crossover probability, in [0,1)");
  auto* s_opt = app.add_option("--s", "Override the certified mutation bound s");
  auto* eps_opt = app.add_option("--epsilon", "Override the certified crossover bound epsilon");

  app.add_option("--runs", cfg.runs, "Campaign size");
  app.add_option("--seed", cfg.seed, "Base seed; run i uses seed + i");
  app.add_option("--workers", cfg.workers, "Concurrent runs (output is identical regardless)");
  auto* budget_opt = app.add_option("--budget", "single_ga iteration budget (default m)");
  app.add_option("--restarts", cfg.restarts, "iterated_ga restart budget");
  app.add_option("--rule", cfg.rule, "local_search pivot rule: first | best")
      ->check(CLI::IsMember({"first", "best"}));

  app.add_option("--out", cfg.out, "Result file (default: stdout)");
  app.add_option("--format", cfg.format, "csv | tsv")->check(CLI::IsMember({"csv", "tsv"}));
  app.add_flag("--timing", cfg.timing, "Emit per-run wall time (not byte-reproducible)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gals");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    parsed.help_requested = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.mode = mode_from_string(mode);
  if (m_opt->count() > 0) cfg.m_override = m_opt->as<std::int64_t>();
  if (lambda_opt->count() > 0) cfg.lambda = lambda_opt->as<std::int64_t>();
  if (k_opt->count() > 0) cfg.k = k_opt->as<std::int64_t>();
  if (pm_opt->count() > 0) cfg.pm = pm_opt->as<double>();
  if (s_opt->count() > 0) cfg.s_override = s_opt->as<double>();
  if (eps_opt->count() > 0) cfg.epsilon_override = eps_opt->as<double>();
  if (budget_opt->count() > 0) cfg.budget = budget_opt->as<std::int64_t>();

  if (cfg.lambda.has_value() != cfg.k.has_value()) {
    throw UsageError("manual parameters need both --lambda and --k");
  }
  if (cfg.lambda && (*cfg.lambda < 2 || *cfg.lambda % 2 != 0)) {
    throw UsageError("--lambda must be even and >= 2");
  }
  if (!cfg.lambda && !(cfg.r > 0.0)) {
    throw UsageError("the planner needs --r > 0");
  }
  if (cfg.runs < 1) throw UsageError("--runs must be >= 1");
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
  if (cfg.restarts < 1) throw UsageError("--restarts must be >= 1");
  return parsed;
}

}  // namespace gals::cli
