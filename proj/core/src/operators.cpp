#include "gals/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gals {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
  }
}

// Sum_{i=1..radius} C(n, i) with an overflow guard.
std::uint64_t hamming_ball_size(int n, int radius) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int i = 1; i <= std::min(radius, n); ++i) {
    const auto wide = static_cast<unsigned __int128>(binom) * static_cast<unsigned>(n - i + 1) /
                      static_cast<unsigned>(i);
    if (wide > (1ull << 61) || total > (1ull << 61)) {
      throw std::invalid_argument("uniform_hamming_ball_draw: ball too large to index");
    }
    binom = static_cast<std::uint64_t>(wide);
    total += binom;
  }
  return total;
}

}  // namespace

Genotype bitwise_mutation(const Genotype& x, double p_m, RandomStream& rng) {
  check_probability(p_m, "bitwise_mutation: P_m");
  Genotype y = x;
  y.clear_cached_fitness();
  for (int i = 0; i < y.size(); ++i) {
    if (rng.next_bernoulli(p_m)) y.flip_bit(i);
  }
  return y;
}

Genotype uniform_neighbor_mutation(const Problem& problem, const Genotype& x, RandomStream& rng) {
  // Reservoir draw over the neighborhood enumeration: the j-th neighbor
  // replaces the pick with probability 1/j, which is uniform over N(x).
  std::optional<Genotype> pick;
  std::uint64_t seen = 0;
  for_each_neighbor(problem, x, problem.neighborhood().radius, [&](const Genotype& y) {
    ++seen;
    if (rng.next_below64(seen) == 0) pick = y;
    return true;
  });
  if (!pick) throw std::invalid_argument("uniform_neighbor_mutation: empty neighborhood");
  return std::move(*pick);
}

Genotype uniform_hamming_ball_draw(const Genotype& x, int radius, RandomStream& rng) {
  const int n = x.size();
  if (n < 1 || radius < 1) {
    throw std::invalid_argument("uniform_hamming_ball_draw: empty ball");
  }
  const std::uint64_t total = hamming_ball_size(n, radius);
  std::uint64_t index = rng.next_below64(total);
  // Locate the flip-set size class, then unrank the lexicographic combination.
  int size = 1;
  auto binom = static_cast<std::uint64_t>(n);
  while (index >= binom) {
    index -= binom;
    ++size;
    binom = static_cast<std::uint64_t>(static_cast<unsigned __int128>(binom) *
                                       static_cast<unsigned>(n - size + 1) /
                                       static_cast<unsigned>(size));
  }
  Genotype y = x;
  y.clear_cached_fitness();
  std::uint64_t remaining = binom;
  int left = size;
  for (int pos = 0; left > 0; ++pos) {
    // Combinations starting with `pos` among those choosing `left` indices
    // from {pos..n-1}: C(n-pos-1, left-1) of C(n-pos, left).
    const auto with_pos =
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(remaining) *
                                   static_cast<unsigned>(left) / static_cast<unsigned>(n - pos));
    if (index < with_pos) {
      y.flip_bit(pos);
      remaining = with_pos;
      --left;
    } else {
      index -= with_pos;
      remaining -= with_pos;
    }
  }
  return y;
}

std::pair<Genotype, Genotype> single_point_crossover(const Genotype& x, const Genotype& y,
                                                     double p_c, RandomStream& rng) {
  check_probability(p_c, "single_point_crossover: P_c");
  if (x.size() != y.size()) {
    throw std::invalid_argument("single_point_crossover: parent length mismatch");
  }
  const int n = x.size();
  if (p_c > 0.0 && n < 2) {
    throw std::invalid_argument("single_point_crossover: need n >= 2 when P_c > 0");
  }
  if (rng.next_bernoulli(p_c)) {
    const int cut = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n - 1)));
    std::vector<std::uint8_t> a(x.bits());
    std::vector<std::uint8_t> b(y.bits());
    for (int i = cut; i < n; ++i) std::swap(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return {Genotype(std::move(a)), Genotype(std::move(b))};
  }
  Genotype cx = x;
  Genotype cy = y;
  cx.clear_cached_fitness();
  cy.clear_cached_fitness();
  return {std::move(cx), std::move(cy)};
}

double mutation_hit_probability(int delta, int n, double p_m) {
  if (n < 1) throw std::invalid_argument("mutation_hit_probability: n must be positive");
  if (delta < 0 || delta > n) {
    throw std::invalid_argument("mutation_hit_probability: delta must lie in [0, n]");
  }
  check_probability(p_m, "mutation_hit_probability: P_m");
  return std::pow(p_m, delta) * std::pow(1.0 - p_m, n - delta);
}

double mutation_hit_bound(int radius, int n) {
  if (radius < 1) throw std::invalid_argument("mutation_hit_bound: K must be >= 1");
  if (2 * radius > n) {
    throw std::invalid_argument("mutation_hit_bound: requires K <= n/2 (no closed-form constant "
                                "is provided beyond that range)");
  }
  return std::pow(static_cast<double>(radius) / (std::numbers::e * n), radius);
}

Genotype random_genotype(int n, RandomStream& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_below(2));
  return Genotype(std::move(bits));
}

double verify_crossover_epsilon(const CrossoverConfig& config, const Problem& problem,
                                std::int64_t samples, RandomStream& rng) {
  if (samples < 1) throw std::invalid_argument("verify_crossover_epsilon: samples must be >= 1");
  const int n = problem.dimension();
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const Genotype x = random_genotype(n, rng);
    const Genotype y = random_genotype(n, rng);
    const Fitness parent_best = std::max(fitness(problem, x), fitness(problem, y));
    std::pair<Genotype, Genotype> children =
        config.kind == CrossoverKind::single_point
            ? single_point_crossover(x, y, config.p_c, rng)
            : std::pair<Genotype, Genotype>{x, y};
    const Fitness child_best =
        std::max(fitness(problem, children.first), fitness(problem, children.second));
    if (child_best >= parent_best) ++successes;
  }
  return static_cast<double>(successes) / static_cast<double>(samples);
}

}  // namespace gals
