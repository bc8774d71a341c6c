#include "gals/theory.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gals/operators.hpp"
#include "gals/parallel.hpp"

namespace gals {
namespace {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

double sample_halfwidth(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (const double x : xs) ss += (x - mean) * (x - mean);
  const double variance = ss / static_cast<double>(xs.size() - 1);
  return kZ99 * std::sqrt(variance / static_cast<double>(xs.size()));
}

double proportion_halfwidth(double p, int n) {
  return kZ99 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (const double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

}  // namespace

PlannedParams plan_parameters(std::int64_t m, double s, double epsilon, double r) {
  if (m <= 1) throw std::invalid_argument("plan_parameters: requires m > 1");
  if (!(s > 0.0)) throw std::invalid_argument("plan_parameters: requires s > 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("plan_parameters: requires epsilon > 0");
  if (!(r > 0.0)) throw std::invalid_argument("plan_parameters: requires r > 0");
  const double denom = s * epsilon * (1.0 - std::exp(-2.0 * r));
  const double ratio = (1.0 + std::log(static_cast<double>(m))) / denom;
  if (!(ratio < 1e18)) {
    throw std::invalid_argument("plan_parameters: inputs demand an impractically large population");
  }
  const auto lambda = 2 * static_cast<std::int64_t>(std::ceil(ratio));
  const auto k = static_cast<std::int64_t>(std::ceil(r * static_cast<double>(lambda)));
  return {lambda, k};
}

LemmaCheck check_lemma_conditions(std::int64_t lambda, std::int64_t k, double r, std::int64_t m,
                                  double s, double epsilon, bool x0_has_feasible) {
  LemmaCheck check;
  if (!x0_has_feasible) check.violations.push_back("initial population feasibility");
  if (!(r > 0.0)) check.violations.push_back("tournament ratio r positivity");
  if (m <= 1) check.violations.push_back("non-optimal value count m > 1");
  if (!(s > 0.0)) check.violations.push_back("mutation bound s positivity");
  if (!(epsilon > 0.0)) check.violations.push_back("crossover bound epsilon positivity");
  if (static_cast<double>(k) < r * static_cast<double>(lambda)) {
    check.violations.push_back("tournament size");
  }
  if (r > 0.0 && s > 0.0 && epsilon > 0.0 && m > 1) {
    const double threshold = 2.0 * (1.0 + std::log(static_cast<double>(m))) /
                             (s * epsilon * (1.0 - std::exp(-2.0 * r)));
    if (static_cast<double>(lambda) < threshold) check.violations.push_back("population size");
  }
  check.ok = check.violations.empty();
  return check;
}

LemmaCheck check_lemma_conditions(const GAParams& params, bool x0_has_feasible) {
  return check_lemma_conditions(params.lambda, params.k, params.r, params.m, params.s,
                                params.epsilon, x0_has_feasible);
}

TheoryBounds success_probability_bounds(double s, double epsilon, double r, double lambda,
                                        std::int64_t m) {
  if (!(s > 0.0 && epsilon > 0.0 && r > 0.0 && lambda > 0.0 && m >= 1)) {
    throw std::invalid_argument("success_probability_bounds: all inputs must be positive");
  }
  TheoryBounds bounds;
  bounds.c = epsilon * (1.0 - std::exp(-2.0 * r));
  bounds.q_lower = s * bounds.c;
  bounds.ell = std::exp(-std::exp(1.0 - s * bounds.c * lambda / 2.0));
  bounds.series_success_lower =
      std::exp(-static_cast<double>(m) * std::exp(1.0 - s * bounds.c * lambda / 2.0));
  return bounds;
}

TheoryBounds plan_with_bounds(std::int64_t m, double s, double epsilon, double r) {
  const PlannedParams planned = plan_parameters(m, s, epsilon, r);
  TheoryBounds bounds =
      success_probability_bounds(s, epsilon, r, static_cast<double>(planned.lambda), m);
  bounds.planned_lambda = planned.lambda;
  bounds.planned_k = planned.k;
  return bounds;
}

std::int64_t estimate_m(const Problem& problem, MEstimateMode mode) {
  switch (mode) {
    case MEstimateMode::exact_bruteforce:
      return brute_force(problem, problem.neighborhood().radius).m_exact;
    case MEstimateMode::declared_bound:
      return problem.objective_upper_bound();
  }
  throw std::logic_error("estimate_m: unknown mode");
}

double certify_s(const MutationConfig& config, const Problem& problem) {
  const auto neighborhood = problem.neighborhood();
  const int n = problem.dimension();
  const int radius = neighborhood.radius;
  switch (config.kind) {
    case MutationKind::uniform_neighbor:
      if (neighborhood.max_size < 1) {
        throw std::invalid_argument("certify_s: neighborhood has no size bound");
      }
      return 1.0 / static_cast<double>(neighborhood.max_size);
    case MutationKind::bitwise: {
      const double planner_rate = static_cast<double>(radius) / static_cast<double>(n);
      if (config.p_m == planner_rate && 2 * radius <= n) {
        return mutation_hit_bound(radius, n);
      }
      double worst = 1.0;
      for (int delta = 1; delta <= radius; ++delta) {
        worst = std::min(worst, mutation_hit_probability(delta, n, config.p_m));
      }
      return worst;
    }
  }
  throw std::logic_error("certify_s: unknown mutation kind");
}

CampaignStats verify_hitting_time(const Problem& problem, const GAParams& params, int runs,
                                  std::uint64_t base_seed, const CampaignOptions& options,
                                  CampaignTrace* trace) {
  params.validate();
  if (runs < 100) throw std::invalid_argument("verify_hitting_time: needs at least 100 runs");
  const bool whole_space = problem.all_strings_feasible();
  const bool x0_feasible =
      whole_space || options.seeding == InitSeeding::seeded_feasible;
  const LemmaCheck check = check_lemma_conditions(params, x0_feasible);
  if (!check.ok) {
    std::string msg = "verify_hitting_time: hitting-time preconditions violated:";
    for (const auto& v : check.violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }

  CampaignStats stats;
  stats.runs = runs;
  stats.m = params.m;
  stats.whole_space = whole_space;

  // Campaign 1: non-restarting executions. On whole-space instances the run
  // continues to the first visit (safety-capped) so the same trajectory
  // yields both the within-m hit indicator and the iterations-to-visit
  // sample; constrained instances stop at the m-iteration window.
  const std::int64_t cap =
      whole_space ? options.until_hit_cap_factor * params.m : params.m;
  std::vector<RunRecord> single_records(static_cast<std::size_t>(runs));
  parallel_for(runs, options.workers, [&](std::int64_t i) {
    RandomStream rng(base_seed + static_cast<std::uint64_t>(i));
    Population init = init_population(problem, params.lambda, options.seeding, rng);
    single_records[static_cast<std::size_t>(i)] =
        run_ga(problem, params, std::move(init), cap, rng, RunOptions{.stop_on_hit = true});
  });

  std::vector<double> iteration_samples;
  iteration_samples.reserve(static_cast<std::size_t>(runs));
  for (const auto& rec : single_records) {
    if (rec.hit && *rec.first_hit <= params.m) ++stats.hits_within_m;
    if (!rec.hit) ++stats.until_hit_caps;
    iteration_samples.push_back(static_cast<double>(rec.total_iterations));
  }
  stats.hit_fraction = static_cast<double>(stats.hits_within_m) / static_cast<double>(runs);
  stats.hit_halfwidth = proportion_halfwidth(stats.hit_fraction, runs);
  if (whole_space) {
    stats.mean_total_iterations = mean_of(iteration_samples);
    stats.total_iterations_halfwidth =
        sample_halfwidth(iteration_samples, stats.mean_total_iterations);
  } else {
    // The e*m expectation statement only covers fully feasible search spaces.
    stats.mean_total_iterations = std::numeric_limits<double>::quiet_NaN();
    stats.total_iterations_halfwidth = std::numeric_limits<double>::quiet_NaN();
  }

  // Campaign 2: iterated executions with t_max = restart period.
  std::vector<RunRecord> iterated_records(static_cast<std::size_t>(runs));
  parallel_for(runs, options.workers, [&](std::int64_t i) {
    RandomStream rng(base_seed + static_cast<std::uint64_t>(runs) +
                     static_cast<std::uint64_t>(i));
    iterated_records[static_cast<std::size_t>(i)] =
        run_iterated_ga(problem, params, options.restart_budget, options.seeding, rng);
  });

  std::vector<double> eta_samples;
  std::vector<double> iterated_iteration_samples;
  eta_samples.reserve(static_cast<std::size_t>(runs));
  for (const auto& rec : iterated_records) {
    if (!rec.hit) ++stats.iterated_misses;
    eta_samples.push_back(
        static_cast<double>(rec.eta.value_or(options.restart_budget)));
    iterated_iteration_samples.push_back(static_cast<double>(rec.total_iterations));
  }
  stats.mean_eta = mean_of(eta_samples);
  stats.eta_halfwidth = sample_halfwidth(eta_samples, stats.mean_eta);
  stats.mean_iterated_iterations = mean_of(iterated_iteration_samples);

  // One-sided violation flags: the guarantees are lower/upper bounds, so only
  // the contradicting side is statistically meaningful.
  const double inv_e = 1.0 / std::numbers::e;
  if (stats.hit_fraction + stats.hit_halfwidth < inv_e) {
    stats.violations.push_back("hit fraction within m iterations is below 1/e");
  }
  if (whole_space &&
      stats.mean_total_iterations - stats.total_iterations_halfwidth >
          std::numbers::e * static_cast<double>(params.m)) {
    stats.violations.push_back("mean iterations to first visit exceeds e*m");
  }
  stats.violation = !stats.violations.empty();

  if (trace != nullptr) {
    trace->rows.clear();
    trace->rows.reserve(static_cast<std::size_t>(2 * runs));
    for (int i = 0; i < runs; ++i) {
      const auto& rec = single_records[static_cast<std::size_t>(i)];
      trace->rows.push_back({"single", i, base_seed + static_cast<std::uint64_t>(i), rec.hit,
                             rec.first_hit, rec.eta, rec.total_iterations, rec.best_fitness});
    }
    for (int i = 0; i < runs; ++i) {
      const auto& rec = iterated_records[static_cast<std::size_t>(i)];
      trace->rows.push_back({"iterated", i,
                             base_seed + static_cast<std::uint64_t>(runs) +
                                 static_cast<std::uint64_t>(i),
                             rec.hit, rec.first_hit, rec.eta, rec.total_iterations,
                             rec.best_fitness});
    }
  }
  return stats;
}

}  // namespace gals
