#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gals/genotype.hpp"
#include "gals/operators.hpp"
#include "gals/problem.hpp"
#include "gals/random.hpp"

namespace gals {

struct Population {
  std::vector<Genotype> members;
  std::int64_t generation_index = 0;

  std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
};

/// Parameters of one GA configuration. lambda must be even; k >= r*lambda is
/// a checkable condition (see theory::check_lemma_conditions), not enforced
/// here. epsilon and s are the certified operator constants the theory
/// module consumes.
struct GAParams {
  std::int64_t lambda = 2;   // population size, even
  std::int64_t k = 1;        // tournament size
  double r = 0.0;            // tournament ratio target (k >= r*lambda)
  std::int64_t m = 1;        // run length; count (or upper bound) of non-optimal objective values
  std::int64_t t_max = 0;    // restart period; 0 means "use m"
  MutationConfig mutation;
  CrossoverConfig crossover;
  double epsilon = 1.0;      // crossover success lower bound, in (0,1]
  double s = 1.0;            // mutation hit-probability lower bound, in (0,1]

  std::int64_t restart_period() const { return t_max > 0 ? t_max : m; }

  /// Throws std::invalid_argument on malformed parameters (odd lambda etc.).
  void validate() const;
};

enum class InitSeeding { uniform, seeded_feasible };

/// Per-run trace. For iterated runs, iteration counts and trajectories
/// accumulate across series; first_hit is the iteration index inside the
/// hitting series (0 = its initial population).
struct RunRecord {
  bool hit = false;
  std::optional<std::int64_t> first_hit;
  std::optional<std::int64_t> eta;        // 1-based index of the first successful series
  std::int64_t total_iterations = 0;      // ga_iteration calls across all series
  Fitness best_fitness = 0;               // best fitness seen in any population
  std::vector<Fitness> best_trajectory;   // per-population best fitness, series concatenated
};

using MutationFn = std::function<Genotype(const Genotype&, RandomStream&)>;
using CrossoverFn =
    std::function<std::pair<Genotype, Genotype>(const Genotype&, const Genotype&, RandomStream&)>;

/// The variation pipeline as two callables, so tests can inject deterministic
/// operators. make_variation_ops builds the configured standard pair.
struct VariationOps {
  MutationFn mutate;
  CrossoverFn cross;
};

VariationOps make_variation_ops(const GAParams& params, const Problem& problem);

/// Draws k member indices uniformly with replacement and returns the index of
/// a maximal-fitness drawn member; ties are broken uniformly among the drawn
/// maximal-fitness slots.
std::int64_t tournament_select(const Problem& problem, const Population& pop, std::int64_t k,
                               RandomStream& rng);

/// One generation: lambda/2 times, select two parents by tournament, mutate
/// each, cross the mutants, and append the offspring pair in generation
/// order. The input population is not modified; no individual survives
/// outside this pipeline.
Population ga_iteration(const Problem& problem, const Population& pop, const GAParams& params,
                        const VariationOps& ops, RandomStream& rng);
Population ga_iteration(const Problem& problem, const Population& pop, const GAParams& params,
                        RandomStream& rng);

/// uniform: all bits iid uniform. seeded_feasible: member 0 is the instance's
/// feasible seed, the rest uniform.
Population init_population(const Problem& problem, std::int64_t lambda, InitSeeding seeding,
                           RandomStream& rng);

struct RunOptions {
  /// Stop as soon as some population member is a feasible local optimum.
  /// The check is observational either way: it never influences selection.
  bool stop_on_hit = true;
};

/// Runs up to `budget` iterations from `init`, recording the best-fitness
/// trajectory and the first iteration whose population contains a feasible
/// local optimum (iteration 0 = init itself).
RunRecord run_ga(const Problem& problem, const GAParams& params, Population init,
                 std::int64_t budget, RandomStream& rng, const RunOptions& options = {});

/// Restarting variant: fresh initial populations, restart_period() iterations
/// per series, stopping at the first visit of a feasible local optimum or
/// after restart_budget series. Exhaustion is flagged by hit = false, not an
/// error.
RunRecord run_iterated_ga(const Problem& problem, const GAParams& params,
                          std::int64_t restart_budget, InitSeeding seeding, RandomStream& rng);

}  // namespace gals
