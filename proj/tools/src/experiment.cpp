#include "experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gals/ga.hpp"
#include "gals/parallel.hpp"
#include "gals/problems.hpp"
#include "gals/theory.hpp"
#include "parsers.hpp"
#include "results.hpp"

namespace gals::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::shared_ptr<const Problem> build_problem(const ExperimentConfig& cfg) {
  if (cfg.problem.empty()) return nullptr;
  if (cfg.problem == "onemax") {
    if (cfg.n < 1) throw UsageError("--problem onemax needs --n >= 1");
    return make_onemax(cfg.n);
  }
  if (cfg.instance_path.empty()) {
    throw UsageError("--problem " + cfg.problem + " needs --instance");
  }
  const std::string text = read_file(cfg.instance_path);
  try {
    if (cfg.problem == "maxcut") return make_maxcut(parse_edge_list(text));
    return make_maxsat(parse_dimacs_cnf(text));
  } catch (const ParseError& e) {
    throw UsageError(cfg.instance_path + ": " + e.what());
  }
}

MutationConfig build_mutation(const ExperimentConfig& cfg, const Problem& problem) {
  if (cfg.mutation == "bitwise") {
    const auto neighborhood = problem.neighborhood();
    const double default_rate =
        static_cast<double>(neighborhood.radius) / static_cast<double>(problem.dimension());
    return MutationConfig::bitwise(cfg.pm.value_or(default_rate));
  }
  return MutationConfig::uniform_neighbor();
}

std::int64_t resolve_m(const ExperimentConfig& cfg, const Problem* problem, std::ostream& err) {
  if (cfg.m_override) return *cfg.m_override;
  if (problem == nullptr) throw UsageError("no instance to estimate m from; pass --m");
  if (problem->dimension() <= 24) {
    return estimate_m(*problem, MEstimateMode::exact_bruteforce);
  }
  err << "note: instance too large for the exact m oracle, using the declared bound\n";
  return estimate_m(*problem, MEstimateMode::declared_bound);
}

/// GA parameters from the config: certified operator constants, m, and
/// either the manual (lambda, k) or the planner's pair.
GAParams build_params(const ExperimentConfig& cfg, const Problem& problem, std::ostream& err) {
  GAParams params;
  params.mutation = build_mutation(cfg, problem);
  params.crossover = cfg.crossover == "onepoint" ? CrossoverConfig::single_point(cfg.pc)
                                                 : CrossoverConfig::identity();
  params.s = cfg.s_override.value_or(certify_s(params.mutation, problem));
  params.epsilon = cfg.epsilon_override.value_or(params.crossover.epsilon_claim());
  params.r = cfg.r;
  params.m = resolve_m(cfg, &problem, err);
  if (cfg.lambda) {
    params.lambda = *cfg.lambda;
    params.k = *cfg.k;
  } else {
    const PlannedParams planned = plan_parameters(params.m, params.s, params.epsilon, params.r);
    params.lambda = planned.lambda;
    params.k = planned.k;
  }
  params.validate();
  return params;
}

InitSeeding auto_seeding(const Problem& problem) {
  return problem.all_strings_feasible() ? InitSeeding::uniform : InitSeeding::seeded_feasible;
}

void emit(const ResultWriter& writer, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << writer.str();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open result file '" + path + "'");
  file << writer.str();
}

std::vector<std::string> run_columns(bool timing) {
  std::vector<std::string> columns = {"phase",           "run_index",    "seed",
                                      "first_hit",       "eta",          "total_iterations",
                                      "best_fitness",    "is_local_opt"};
  if (timing) columns.push_back("wall_time_ms");
  return columns;
}

void add_run_row(ResultWriter& writer, const ExperimentConfig& cfg, const std::string& phase,
                 std::int64_t index, std::uint64_t seed, const RunRecord& rec, double wall_ms) {
  std::vector<std::string> cells = {phase,
                                    std::to_string(index),
                                    std::to_string(seed),
                                    cell(rec.first_hit),
                                    cell(rec.eta),
                                    std::to_string(rec.total_iterations),
                                    std::to_string(rec.best_fitness),
                                    rec.hit ? "1" : "0"};
  if (cfg.timing) cells.push_back(format_double(wall_ms));
  writer.add_row(cells);
}

void add_params_footer(ResultWriter& writer, const GAParams& params, bool planned) {
  writer.add_footer("parameter_source", planned ? "planner" : "manual");
  writer.add_footer("lambda", params.lambda);
  writer.add_footer("k", params.k);
  writer.add_footer("r", params.r);
  writer.add_footer("m", params.m);
  writer.add_footer("s", params.s);
  writer.add_footer("epsilon", params.epsilon);
  writer.add_footer("mutation",
                    params.mutation.kind == MutationKind::bitwise ? "bitwise" : "neighbor");
  if (params.mutation.kind == MutationKind::bitwise) {
    writer.add_footer("pm", params.mutation.p_m);
  }
  writer.add_footer("crossover", params.crossover.kind == CrossoverKind::single_point
                                     ? "onepoint"
                                     : "identity");
  if (params.crossover.kind == CrossoverKind::single_point) {
    writer.add_footer("pc", params.crossover.p_c);
  }
  const TheoryBounds bounds = success_probability_bounds(
      params.s, params.epsilon, params.r, static_cast<double>(params.lambda), params.m);
  writer.add_footer("q_lower", bounds.q_lower);
  writer.add_footer("c", bounds.c);
  writer.add_footer("ell", bounds.ell);
  writer.add_footer("series_success_lower", bounds.series_success_lower);
}

int run_plan_only(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto problem = build_problem(cfg);
  double s = 0.0;
  double epsilon = cfg.epsilon_override.value_or(
      cfg.crossover == "onepoint" ? CrossoverConfig::single_point(cfg.pc).epsilon_claim() : 1.0);
  if (cfg.s_override) {
    s = *cfg.s_override;
  } else if (problem) {
    s = certify_s(build_mutation(cfg, *problem), *problem);
  } else {
    throw UsageError("plan_only without an instance needs --s");
  }
  const std::int64_t m = resolve_m(cfg, problem.get(), err);
  const TheoryBounds bounds = plan_with_bounds(m, s, epsilon, cfg.r);

  out << "lambda = " << bounds.planned_lambda << '\n';
  out << "k = " << bounds.planned_k << '\n';
  out << "m = " << m << '\n';
  out << "s = " << format_double(s) << '\n';
  out << "epsilon = " << format_double(epsilon) << '\n';
  out << "r = " << format_double(cfg.r) << '\n';
  out << "q_lower = " << format_double(bounds.q_lower) << '\n';
  out << "c = " << format_double(bounds.c) << '\n';
  out << "ell = " << format_double(bounds.ell) << '\n';
  out << "series_success_lower = " << format_double(bounds.series_success_lower) << '\n';

  if (!cfg.out.empty()) {
    ResultWriter writer(cfg.format);
    writer.set_header({"key", "value"});
    writer.add_row({"lambda", std::to_string(bounds.planned_lambda)});
    writer.add_row({"k", std::to_string(bounds.planned_k)});
    writer.add_footer("m", m);
    writer.add_footer("s", s);
    writer.add_footer("epsilon", epsilon);
    writer.add_footer("r", cfg.r);
    writer.add_footer("q_lower", bounds.q_lower);
    writer.add_footer("c", bounds.c);
    writer.add_footer("ell", bounds.ell);
    writer.add_footer("series_success_lower", bounds.series_success_lower);
    emit(writer, cfg.out, out);
  }
  return kExitOk;
}

int run_brute_force(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto problem = build_problem(cfg);
  if (!problem) throw UsageError("brute_force needs --problem");
  const int radius = problem->neighborhood().radius;
  BruteForceReport report;
  try {
    report = brute_force(*problem, radius);
  } catch (const oversize_error& e) {
    err << "oversize: " << e.what() << '\n';
    return kExitUsage;
  }
  ResultWriter writer(cfg.format);
  writer.set_header({"index", "genotype", "objective"});
  for (std::size_t i = 0; i < report.local_optima.size(); ++i) {
    const auto& g = report.local_optima[i];
    writer.add_row({std::to_string(i), g.to_string(), std::to_string(problem->objective(g))});
  }
  writer.add_footer("problem", problem->name());
  writer.add_footer("n", problem->dimension());
  writer.add_footer("radius", radius);
  writer.add_footer("global_optimum", report.global_optimum_value);
  writer.add_footer("m_exact", report.m_exact);
  writer.add_footer("local_optima", static_cast<std::int64_t>(report.local_optima.size()));
  writer.add_footer("distinct_values", static_cast<std::int64_t>(report.objective_values.size()));
  emit(writer, cfg.out, out);
  return kExitOk;
}

int run_local_search(const ExperimentConfig& cfg, std::ostream& out, std::ostream&) {
  const auto problem = build_problem(cfg);
  if (!problem) throw UsageError("local_search needs --problem");
  const int radius = problem->neighborhood().radius;
  const LocalSearchRule rule =
      cfg.rule == "first" ? LocalSearchRule::first_improving : LocalSearchRule::best_improving;

  struct Row {
    std::int64_t steps = 0;
    Fitness value = 0;
    double wall_ms = 0.0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.runs));
  parallel_for(cfg.runs, cfg.workers, [&](std::int64_t i) {
    RandomStream rng(cfg.seed + static_cast<std::uint64_t>(i));
    Genotype start = random_genotype(problem->dimension(), rng);
    for (int attempt = 0; attempt < 1000 && !problem->is_feasible(start); ++attempt) {
      start = random_genotype(problem->dimension(), rng);
    }
    if (!problem->is_feasible(start)) {
      const auto seed = problem->feasible_seed();
      if (!seed) throw std::runtime_error("local_search: no feasible start found");
      start = *seed;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto [optimum, steps] = local_search(*problem, start, radius, rule);
    const auto t1 = std::chrono::steady_clock::now();
    rows[static_cast<std::size_t>(i)] = {
        steps, problem->objective(optimum),
        std::chrono::duration<double, std::milli>(t1 - t0).count()};
  });

  ResultWriter writer(cfg.format);
  std::vector<std::string> columns = {"run_index", "seed", "steps", "final_objective",
                                      "is_local_opt"};
  if (cfg.timing) columns.push_back("wall_time_ms");
  writer.set_header(std::move(columns));
  std::int64_t max_steps = 0;
  Fitness best = std::numeric_limits<Fitness>::min();
  for (std::int64_t i = 0; i < cfg.runs; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    std::vector<std::string> cells = {std::to_string(i),
                                      std::to_string(cfg.seed + static_cast<std::uint64_t>(i)),
                                      std::to_string(row.steps), std::to_string(row.value), "1"};
    if (cfg.timing) cells.push_back(format_double(row.wall_ms));
    writer.add_row(cells);
    max_steps = std::max(max_steps, row.steps);
    best = std::max(best, row.value);
  }
  writer.add_footer("problem", problem->name());
  writer.add_footer("runs", cfg.runs);
  writer.add_footer("rule", cfg.rule);
  writer.add_footer("max_steps", max_steps);
  writer.add_footer("best_objective", best);
  emit(writer, cfg.out, out);
  return kExitOk;
}

int run_ga_mode(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto problem = build_problem(cfg);
  if (!problem) throw UsageError(to_string(cfg.mode) + " needs --problem");
  const GAParams params = build_params(cfg, *problem, err);
  const InitSeeding seeding = auto_seeding(*problem);
  const bool iterated = cfg.mode == Mode::iterated_ga;
  const std::int64_t budget = cfg.budget.value_or(params.m);

  struct Slot {
    RunRecord rec;
    double wall_ms = 0.0;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(cfg.runs));
  parallel_for(cfg.runs, cfg.workers, [&](std::int64_t i) {
    RandomStream rng(cfg.seed + static_cast<std::uint64_t>(i));
    const auto t0 = std::chrono::steady_clock::now();
    RunRecord rec;
    if (iterated) {
      rec = run_iterated_ga(*problem, params, cfg.restarts, seeding, rng);
    } else {
      Population init = init_population(*problem, params.lambda, seeding, rng);
      rec = run_ga(*problem, params, std::move(init), budget, rng);
    }
    const auto t1 = std::chrono::steady_clock::now();
    slots[static_cast<std::size_t>(i)] = {
        std::move(rec), std::chrono::duration<double, std::milli>(t1 - t0).count()};
  });

  ResultWriter writer(cfg.format);
  writer.set_header(run_columns(cfg.timing));
  const std::string phase = iterated ? "iterated" : "single";
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < cfg.runs; ++i) {
    const auto& slot = slots[static_cast<std::size_t>(i)];
    add_run_row(writer, cfg, phase, i, cfg.seed + static_cast<std::uint64_t>(i), slot.rec,
                slot.wall_ms);
    hits += slot.rec.hit;
  }
  writer.add_footer("problem", problem->name());
  writer.add_footer("mode", to_string(cfg.mode));
  writer.add_footer("runs", cfg.runs);
  writer.add_footer("base_seed", cfg.seed);
  writer.add_footer("hits", hits);
  if (!iterated) writer.add_footer("budget", budget);
  if (iterated) writer.add_footer("restart_budget", cfg.restarts);
  add_params_footer(writer, params, !cfg.lambda.has_value());
  emit(writer, cfg.out, out);
  return kExitOk;
}

int run_verify(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto problem = build_problem(cfg);
  if (!problem) throw UsageError(to_string(cfg.mode) + " needs --problem");
  const GAParams params = build_params(cfg, *problem, err);

  CampaignOptions options;
  options.workers = cfg.workers;
  options.restart_budget = cfg.restarts;
  options.seeding = auto_seeding(*problem);
  CampaignTrace trace;
  const CampaignStats stats = verify_hitting_time(*problem, params, cfg.runs, cfg.seed, options,
                                                  &trace);

  // The campaign does not time individual runs, so verify rows never carry
  // the timing column.
  ExperimentConfig row_cfg = cfg;
  row_cfg.timing = false;
  ResultWriter writer(cfg.format);
  writer.set_header(run_columns(false));
  for (const auto& row : trace.rows) {
    RunRecord rec;
    rec.hit = row.hit;
    rec.first_hit = row.first_hit;
    rec.eta = row.eta;
    rec.total_iterations = row.total_iterations;
    rec.best_fitness = row.best_fitness;
    add_run_row(writer, row_cfg, row.phase, row.run_index, row.seed, rec, 0.0);
  }
  writer.add_footer("problem", problem->name());
  writer.add_footer("mode", to_string(cfg.mode));
  writer.add_footer("runs", stats.runs);
  writer.add_footer("base_seed", cfg.seed);
  writer.add_footer("whole_space", stats.whole_space);
  writer.add_footer("hits_within_m", stats.hits_within_m);
  writer.add_footer("hit_fraction", stats.hit_fraction);
  writer.add_footer("hit_halfwidth", stats.hit_halfwidth);
  writer.add_footer("mean_total_iterations", stats.mean_total_iterations);
  writer.add_footer("total_iterations_halfwidth", stats.total_iterations_halfwidth);
  writer.add_footer("until_hit_caps", stats.until_hit_caps);
  writer.add_footer("mean_eta", stats.mean_eta);
  writer.add_footer("eta_halfwidth", stats.eta_halfwidth);
  writer.add_footer("mean_iterated_iterations", stats.mean_iterated_iterations);
  writer.add_footer("iterated_misses", stats.iterated_misses);
  writer.add_footer("violation", stats.violation);
  for (std::size_t i = 0; i < stats.violations.size(); ++i) {
    writer.add_footer("violation_" + std::to_string(i), stats.violations[i]);
  }
  add_params_footer(writer, params, !cfg.lambda.has_value());
  emit(writer, cfg.out, out);

  const double inv_e = 1.0 / std::numbers::e;
  if (cfg.mode == Mode::verify_lemma1) {
    out << "hit_fraction = " << format_double(stats.hit_fraction) << " (target >= "
        << format_double(inv_e) << ", halfwidth " << format_double(stats.hit_halfwidth) << ")\n";
  } else {
    if (stats.whole_space) {
      out << "mean_total_iterations = " << format_double(stats.mean_total_iterations)
          << " (target <= " << format_double(std::numbers::e * static_cast<double>(params.m))
          << ", halfwidth " << format_double(stats.total_iterations_halfwidth) << ")\n";
    } else {
      out << "mean iterations bound not applicable: feasibility does not cover the whole "
             "search space\n";
    }
    out << "mean_eta = " << format_double(stats.mean_eta) << " (target <= "
        << format_double(std::numbers::e) << ")\n";
  }
  if (stats.violation) {
    for (const auto& v : stats.violations) err << "VIOLATION: " << v << '\n';
    return kExitViolation;
  }
  out << "no violation\n";
  return kExitOk;
}

}  // namespace

int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.mode) {
      case Mode::plan_only:
        return run_plan_only(config, out, err);
      case Mode::brute_force:
        return run_brute_force(config, out, err);
      case Mode::local_search:
        return run_local_search(config, out, err);
      case Mode::single_ga:
      case Mode::iterated_ga:
        return run_ga_mode(config, out, err);
      case Mode::verify_lemma1:
      case Mode::verify_prop1:
        return run_verify(config, out, err);
    }
    throw std::logic_error("run_experiment: unhandled mode");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gals::cli
