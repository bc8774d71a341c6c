#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "gals/genotype.hpp"
#include "gals/problem.hpp"
#include "gals/random.hpp"

namespace gals {

enum class MutationKind { bitwise, uniform_neighbor };

struct MutationConfig {
  MutationKind kind = MutationKind::bitwise;
  double p_m = 0.0;  // per-bit flip probability; bitwise only

  static MutationConfig bitwise(double p_m) { return {MutationKind::bitwise, p_m}; }
  static MutationConfig uniform_neighbor() { return {MutationKind::uniform_neighbor, 0.0}; }
};

enum class CrossoverKind { single_point, identity };

struct CrossoverConfig {
  CrossoverKind kind = CrossoverKind::identity;
  double p_c = 0.0;  // crossover probability; single_point only, must stay < 1

  /// Certified lower bound on the probability that crossover does not
  /// decrease the better parent's fitness: 1 - P_c for single-point (the copy
  /// branch alone guarantees it), 1 for identity.
  double epsilon_claim() const { return kind == CrossoverKind::identity ? 1.0 : 1.0 - p_c; }

  static CrossoverConfig single_point(double p_c) { return {CrossoverKind::single_point, p_c}; }
  static CrossoverConfig identity() { return {CrossoverKind::identity, 0.0}; }
};

/// Flips every bit independently with probability p_m. The input is left
/// untouched.
Genotype bitwise_mutation(const Genotype& x, double p_m, RandomStream& rng);

/// Uniform draw from the instance's neighborhood N(x). Rejects infeasible x
/// and empty neighborhoods.
Genotype uniform_neighbor_mutation(const Problem& problem, const Genotype& x, RandomStream& rng);

/// Uniform draw from the raw Hamming ball {y != x : distance <= radius},
/// ignoring feasibility. Used as the neighbor-mutation fallback when the GA
/// hands an infeasible genotype to a constrained instance.
Genotype uniform_hamming_ball_draw(const Genotype& x, int radius, RandomStream& rng);

/// With probability p_c, cuts both parents at a point chosen uniformly from
/// {1, ..., n-1} and swaps the suffixes; otherwise returns exact copies.
std::pair<Genotype, Genotype> single_point_crossover(const Genotype& x, const Genotype& y,
                                                     double p_c, RandomStream& rng);

/// Exact probability P_m^delta (1 - P_m)^(n - delta) that bitwise mutation
/// turns a fixed string into a fixed target at Hamming distance delta.
double mutation_hit_probability(int delta, int n, double p_m);

/// Lower bound (K/(e n))^K on every hit probability within a K-bounded
/// neighborhood when P_m = K/n. Requires 1 <= K <= n/2.
double mutation_hit_bound(int radius, int n);

/// Generates a random genotype with iid uniform bits.
Genotype random_genotype(int n, RandomStream& rng);

/// Empirical frequency, over `samples` uniform random parent pairs, of
/// max{fitness(x'), fitness(y')} >= max{fitness(x), fitness(y)} under the
/// configured crossover. Must come out >= epsilon_claim() up to noise.
double verify_crossover_epsilon(const CrossoverConfig& config, const Problem& problem,
                                std::int64_t samples, RandomStream& rng);

}  // namespace gals
