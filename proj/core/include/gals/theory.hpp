#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gals/ga.hpp"
#include "gals/problem.hpp"

namespace gals {

/// Computable bounds behind the hitting-time guarantee:
///   c    = epsilon * (1 - e^{-2r})
///   q    >= s * c                      (per-pair success probability)
///   ell  = exp(-e^{1 - s c lambda/2})  (per-iteration-chain lower bound)
///   ell^m                              (series success lower bound; >= 1/e at
///                                       planned parameters)
struct TheoryBounds {
  double q_lower = 0.0;
  double c = 0.0;
  double ell = 0.0;
  double series_success_lower = 0.0;
  std::int64_t planned_lambda = 0;  // 0 when the planner was not involved
  std::int64_t planned_k = 0;
};

struct PlannedParams {
  std::int64_t lambda = 0;
  std::int64_t k = 0;
};

/// Closed-form parameter choice
///   lambda = 2 * ceil((1 + ln m) / (s * epsilon * (1 - e^{-2r}))),
///   k      = ceil(r * lambda).
/// Requires m > 1 and positive s, epsilon, r. The result always satisfies
/// check_lemma_conditions.
PlannedParams plan_parameters(std::int64_t m, double s, double epsilon, double r);

struct LemmaCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

/// Checks the hitting-time preconditions: feasible initial population,
/// k >= r*lambda, r > 0, m > 1, s > 0, and
/// lambda >= 2(1 + ln m) / (s * epsilon * (1 - e^{-2r})).
LemmaCheck check_lemma_conditions(std::int64_t lambda, std::int64_t k, double r, std::int64_t m,
                                  double s, double epsilon, bool x0_has_feasible);
LemmaCheck check_lemma_conditions(const GAParams& params, bool x0_has_feasible);

/// Evaluates TheoryBounds at the given (possibly fractional) lambda. At the
/// exact real-valued lambda = 2(1 + ln m)/(s c) the series bound equals 1/e.
TheoryBounds success_probability_bounds(double s, double epsilon, double r, double lambda,
                                        std::int64_t m);

/// plan_parameters plus the bounds evaluated at the planned lambda.
TheoryBounds plan_with_bounds(std::int64_t m, double s, double epsilon, double r);

enum class MEstimateMode { exact_bruteforce, declared_bound };

/// exact_bruteforce: distinct feasible objective values - 1, via the
/// enumeration oracle (n <= 24). declared_bound: the instance's objective
/// upper bound, a valid m upper bound since feasible values lie in
/// {0, ..., bound}.
std::int64_t estimate_m(const Problem& problem, MEstimateMode mode);

/// Certified lower bound s on the probability that mutation produces any
/// designated neighbor. Bitwise at P_m = K/n uses the (K/(en))^K bound;
/// other bitwise rates use the exact minimum over distances 1..K; uniform
/// neighbor mutation certifies 1/max|N(x)|.
double certify_s(const MutationConfig& config, const Problem& problem);

struct CampaignOptions {
  int workers = 1;
  /// Safety cap for run-until-first-visit executions: budget = factor * m.
  std::int64_t until_hit_cap_factor = 1000;
  std::int64_t restart_budget = 1000;
  InitSeeding seeding = InitSeeding::uniform;
};

/// One row per executed run, for result files.
struct RunRow {
  std::string phase;  // "single" or "iterated"
  std::int64_t run_index = 0;
  std::uint64_t seed = 0;
  bool hit = false;
  std::optional<std::int64_t> first_hit;
  std::optional<std::int64_t> eta;
  std::int64_t total_iterations = 0;
  Fitness best_fitness = 0;
};

struct CampaignTrace {
  std::vector<RunRow> rows;
};

/// Aggregates over a verification campaign. Halfwidths are 99% two-sided
/// normal-approximation confidence interval halfwidths; violations flag
/// one-sided statistical contradictions of the guarantees (an implementation
/// bug, since the bounds are proven).
struct CampaignStats {
  int runs = 0;
  std::int64_t m = 0;
  bool whole_space = false;

  // Non-restarting campaign (budget m for constrained instances, run until
  // first visit with a safety cap when the whole space is feasible).
  int hits_within_m = 0;
  double hit_fraction = 0.0;
  double hit_halfwidth = 0.0;
  double mean_total_iterations = 0.0;   // iterations to first visit; whole-space only
  double total_iterations_halfwidth = 0.0;
  int until_hit_caps = 0;               // runs that exhausted the safety cap

  // Iterated campaign (t_max = restart period).
  double mean_eta = 0.0;
  double eta_halfwidth = 0.0;
  double mean_iterated_iterations = 0.0;
  int iterated_misses = 0;              // runs that exhausted restart_budget

  bool violation = false;
  std::vector<std::string> violations;
};

/// Statistical verifier: `runs` independent non-restarting executions
/// (hit fraction within m iterations must reach 1/e, and, on whole-space
/// instances, mean iterations to first visit must stay within e*m) plus
/// `runs` iterated executions (mean eta). Run i of the first campaign is
/// seeded with base_seed + i, of the second with base_seed + runs + i.
/// Rejects parameter sets that fail check_lemma_conditions and campaigns of
/// fewer than 100 runs.
CampaignStats verify_hitting_time(const Problem& problem, const GAParams& params, int runs,
                                  std::uint64_t base_seed, const CampaignOptions& options = {},
                                  CampaignTrace* trace = nullptr);

}  // namespace gals
