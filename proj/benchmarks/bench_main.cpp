#include <benchmark/benchmark.h>

#include "gals/ga.hpp"
#include "gals/operators.hpp"
#include "gals/problem.hpp"
#include "gals/problems.hpp"
#include "gals/theory.hpp"

using namespace gals;

namespace {

GAParams planner_params(const Problem& problem, std::int64_t m) {
  GAParams params;
  params.mutation = MutationConfig::uniform_neighbor();
  params.crossover = CrossoverConfig::identity();
  params.s = certify_s(params.mutation, problem);
  params.epsilon = 1.0;
  params.r = 0.5;
  params.m = m;
  const PlannedParams planned = plan_parameters(m, params.s, params.epsilon, params.r);
  params.lambda = planned.lambda;
  params.k = planned.k;
  return params;
}

void BM_TournamentSelect(benchmark::State& state) {
  const auto problem = make_onemax(32);
  RandomStream rng(1);
  const Population pop = init_population(*problem, 128, InitSeeding::uniform, rng);
  for (auto& member : pop.members) fitness(*problem, member);
  const std::int64_t k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tournament_select(*problem, pop, k, rng));
  }
}
BENCHMARK(BM_TournamentSelect)->Arg(2)->Arg(16)->Arg(64);

void BM_BitwiseMutation(benchmark::State& state) {
  RandomStream rng(2);
  const auto n = static_cast<int>(state.range(0));
  const Genotype x = random_genotype(n, rng);
  const double p_m = 1.0 / n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bitwise_mutation(x, p_m, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BitwiseMutation)->Range(16, 1024)->Complexity();

void BM_NeighborMutation(benchmark::State& state) {
  const auto problem = make_onemax(static_cast<int>(state.range(0)));
  RandomStream rng(3);
  const Genotype x = random_genotype(problem->dimension(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniform_neighbor_mutation(*problem, x, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NeighborMutation)->Range(16, 256)->Complexity();

void BM_GaIteration(benchmark::State& state) {
  const auto problem = make_onemax(16);
  const GAParams params = planner_params(*problem, 16);
  const VariationOps ops = make_variation_ops(params, *problem);
  RandomStream rng(4);
  Population pop = init_population(*problem, params.lambda, InitSeeding::uniform, rng);
  for (auto _ : state) {
    pop = ga_iteration(*problem, pop, params, ops, rng);
    benchmark::DoNotOptimize(pop);
  }
}
BENCHMARK(BM_GaIteration);

void BM_LocalSearch(benchmark::State& state) {
  const auto problem = make_onemax(static_cast<int>(state.range(0)));
  RandomStream rng(5);
  for (auto _ : state) {
    const Genotype start = random_genotype(problem->dimension(), rng);
    benchmark::DoNotOptimize(local_search(*problem, start, 1, LocalSearchRule::best_improving));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LocalSearch)->Range(8, 64)->Complexity();

void BM_BruteForce(benchmark::State& state) {
  const auto problem = make_onemax(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(*problem, 1));
  }
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14);

void BM_IteratedGaRun(benchmark::State& state) {
  const auto problem = make_onemax(8);
  const GAParams params = planner_params(*problem, 8);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RandomStream rng(++seed);
    benchmark::DoNotOptimize(
        run_iterated_ga(*problem, params, 100, InitSeeding::uniform, rng));
  }
}
BENCHMARK(BM_IteratedGaRun);

}  // namespace

BENCHMARK_MAIN();
