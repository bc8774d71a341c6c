#include "gals/ga.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace gals {
namespace {

/// Per-run cache of "is this genotype a feasible local optimum" answers.
/// Populations repeat genotypes heavily, so the neighborhood enumeration
/// runs once per distinct bitstring.
class LocalOptimumMemo {
 public:
  explicit LocalOptimumMemo(const Problem& problem)
      : problem_(problem), radius_(problem.neighborhood().radius) {}

  bool contains_local_optimum(const Population& pop) {
    for (const auto& member : pop.members) {
      if (!problem_.is_feasible(member)) continue;
      const std::string key = member.to_string();
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        it = cache_.emplace(key, is_local_optimum(problem_, member, radius_)).first;
      }
      if (it->second) return true;
    }
    return false;
  }

 private:
  const Problem& problem_;
  int radius_;
  std::unordered_map<std::string, bool> cache_;
};

Fitness population_best(const Problem& problem, const Population& pop) {
  Fitness best = std::numeric_limits<Fitness>::min();
  for (const auto& member : pop.members) best = std::max(best, fitness(problem, member));
  return best;
}

/// One series: up to `budget` iterations from `pop`, checking every
/// population (including the initial one) for a feasible local optimum.
RunRecord run_series(const Problem& problem, const GAParams& params, const VariationOps& ops,
                     Population pop, std::int64_t budget, RandomStream& rng,
                     const RunOptions& options, LocalOptimumMemo& memo) {
  RunRecord rec;
  rec.best_fitness = std::numeric_limits<Fitness>::min();
  auto record = [&](const Population& p, std::int64_t t) {
    const Fitness best = population_best(problem, p);
    rec.best_trajectory.push_back(best);
    rec.best_fitness = std::max(rec.best_fitness, best);
    if (!rec.hit && memo.contains_local_optimum(p)) {
      rec.hit = true;
      rec.first_hit = t;
    }
  };
  record(pop, 0);
  for (std::int64_t t = 1; t <= budget; ++t) {
    if (rec.hit && options.stop_on_hit) break;
    pop = ga_iteration(problem, pop, params, ops, rng);
    ++rec.total_iterations;
    record(pop, t);
  }
  return rec;
}

}  // namespace

void GAParams::validate() const {
  if (lambda < 2 || lambda % 2 != 0) {
    throw std::invalid_argument("GAParams: population size must be even and >= 2");
  }
  if (k < 1) throw std::invalid_argument("GAParams: tournament size must be >= 1");
  if (m < 1) throw std::invalid_argument("GAParams: m must be >= 1");
  if (t_max < 0) throw std::invalid_argument("GAParams: t_max must be >= 0");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("GAParams: epsilon must lie in (0,1]");
  }
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("GAParams: s must lie in (0,1]");
  if (mutation.kind == MutationKind::bitwise && !(mutation.p_m >= 0.0 && mutation.p_m <= 1.0)) {
    throw std::invalid_argument("GAParams: P_m must lie in [0,1]");
  }
  if (crossover.kind == CrossoverKind::single_point &&
      !(crossover.p_c >= 0.0 && crossover.p_c < 1.0)) {
    throw std::invalid_argument("GAParams: P_c must lie in [0,1)");
  }
}

VariationOps make_variation_ops(const GAParams& params, const Problem& problem) {
  VariationOps ops;
  switch (params.mutation.kind) {
    case MutationKind::bitwise: {
      const double p_m = params.mutation.p_m;
      ops.mutate = [p_m](const Genotype& g, RandomStream& rng) {
        return bitwise_mutation(g, p_m, rng);
      };
      break;
    }
    case MutationKind::uniform_neighbor: {
      const Problem* p = &problem;
      const int radius = problem.neighborhood().radius;
      ops.mutate = [p, radius](const Genotype& g, RandomStream& rng) {
        // N(x) is only defined on feasible solutions; infeasible genotypes
        // (possible on constrained instances) draw from the raw Hamming ball.
        if (p->is_feasible(g)) return uniform_neighbor_mutation(*p, g, rng);
        return uniform_hamming_ball_draw(g, radius, rng);
      };
      break;
    }
  }
  switch (params.crossover.kind) {
    case CrossoverKind::single_point: {
      const double p_c = params.crossover.p_c;
      ops.cross = [p_c](const Genotype& x, const Genotype& y, RandomStream& rng) {
        return single_point_crossover(x, y, p_c, rng);
      };
      break;
    }
    case CrossoverKind::identity: {
      ops.cross = [](const Genotype& x, const Genotype& y, RandomStream&) {
        return std::pair<Genotype, Genotype>{x, y};
      };
      break;
    }
  }
  return ops;
}

std::int64_t tournament_select(const Problem& problem, const Population& pop, std::int64_t k,
                               RandomStream& rng) {
  if (pop.members.empty()) throw std::invalid_argument("tournament_select: empty population");
  if (k < 1) throw std::invalid_argument("tournament_select: k must be >= 1");
  const auto lambda = static_cast<std::uint32_t>(pop.members.size());
  std::int64_t chosen = -1;
  Fitness best = 0;
  std::int64_t tied = 0;
  for (std::int64_t draw = 0; draw < k; ++draw) {
    const auto idx = static_cast<std::int64_t>(rng.next_below(lambda));
    const Fitness f = fitness(problem, pop.members[static_cast<std::size_t>(idx)]);
    if (chosen < 0 || f > best) {
      chosen = idx;
      best = f;
      tied = 1;
    } else if (f == best) {
      ++tied;
      if (rng.next_unit() < 1.0 / static_cast<double>(tied)) chosen = idx;
    }
  }
  return chosen;
}

Population ga_iteration(const Problem& problem, const Population& pop, const GAParams& params,
                        const VariationOps& ops, RandomStream& rng) {
  params.validate();
  if (pop.size() != params.lambda) {
    throw std::invalid_argument("ga_iteration: population size does not match lambda");
  }
  Population next;
  next.members.reserve(static_cast<std::size_t>(params.lambda));
  next.generation_index = pop.generation_index + 1;
  for (std::int64_t j = 0; j < params.lambda / 2; ++j) {
    const auto xi = tournament_select(problem, pop, params.k, rng);
    const auto yi = tournament_select(problem, pop, params.k, rng);
    Genotype xm = ops.mutate(pop.members[static_cast<std::size_t>(xi)], rng);
    Genotype ym = ops.mutate(pop.members[static_cast<std::size_t>(yi)], rng);
    auto children = ops.cross(xm, ym, rng);
    next.members.push_back(std::move(children.first));
    next.members.push_back(std::move(children.second));
  }
  return next;
}

Population ga_iteration(const Problem& problem, const Population& pop, const GAParams& params,
                        RandomStream& rng) {
  return ga_iteration(problem, pop, params, make_variation_ops(params, problem), rng);
}

Population init_population(const Problem& problem, std::int64_t lambda, InitSeeding seeding,
                           RandomStream& rng) {
  if (lambda < 2 || lambda % 2 != 0) {
    throw std::invalid_argument("init_population: population size must be even and >= 2");
  }
  Population pop;
  pop.members.reserve(static_cast<std::size_t>(lambda));
  if (seeding == InitSeeding::seeded_feasible) {
    auto seed = problem.feasible_seed();
    if (!seed) {
      throw std::invalid_argument("init_population: " + problem.name() +
                                  " provides no feasible seed");
    }
    pop.members.push_back(std::move(*seed));
  }
  while (pop.size() < lambda) pop.members.push_back(random_genotype(problem.dimension(), rng));
  return pop;
}

RunRecord run_ga(const Problem& problem, const GAParams& params, Population init,
                 std::int64_t budget, RandomStream& rng, const RunOptions& options) {
  params.validate();
  if (budget < 0) throw std::invalid_argument("run_ga: budget must be >= 0");
  const VariationOps ops = make_variation_ops(params, problem);
  LocalOptimumMemo memo(problem);
  return run_series(problem, params, ops, std::move(init), budget, rng, options, memo);
}

RunRecord run_iterated_ga(const Problem& problem, const GAParams& params,
                          std::int64_t restart_budget, InitSeeding seeding, RandomStream& rng) {
  params.validate();
  if (restart_budget < 1) {
    throw std::invalid_argument("run_iterated_ga: restart budget must be >= 1");
  }
  const std::int64_t t_max = params.restart_period();
  const VariationOps ops = make_variation_ops(params, problem);
  LocalOptimumMemo memo(problem);
  RunRecord rec;
  rec.best_fitness = std::numeric_limits<Fitness>::min();
  for (std::int64_t series = 1; series <= restart_budget; ++series) {
    Population init = init_population(problem, params.lambda, seeding, rng);
    RunRecord sr = run_series(problem, params, ops, std::move(init), t_max, rng,
                              RunOptions{.stop_on_hit = true}, memo);
    rec.total_iterations += sr.total_iterations;
    rec.best_fitness = std::max(rec.best_fitness, sr.best_fitness);
    rec.best_trajectory.insert(rec.best_trajectory.end(), sr.best_trajectory.begin(),
                               sr.best_trajectory.end());
    if (sr.hit) {
      rec.hit = true;
      rec.eta = series;
      rec.first_hit = sr.first_hit;
      break;
    }
  }
  return rec;
}

}  // namespace gals
