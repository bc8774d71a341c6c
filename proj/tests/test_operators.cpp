#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "gals/operators.hpp"
#include "gals/problems.hpp"
#include "support/test_support.hpp"

using namespace gals;
using namespace gals::testing;

TEST_CASE("bitwise_mutation edge rates: identity at 0, complement at 1") {
  RandomStream rng(1);
  const Genotype x = Genotype::from_string("0110100");
  const Genotype same = bitwise_mutation(x, 0.0, rng);
  CHECK(same == x);
  const Genotype flipped = bitwise_mutation(x, 1.0, rng);
  CHECK(hamming_distance(x, flipped) == x.size());
  CHECK(x == Genotype::from_string("0110100"));  // input untouched
}

TEST_CASE("bitwise_mutation hit frequency matches the closed form") {
  // Target at Hamming distance 2, n=20, P_m=0.1: the exact hit probability is
  // 0.1^2 * 0.9^18 = 1.50094635e-3.
  const int n = 20;
  const double p_hit = 1.50094635e-3;
  const Genotype x = Genotype::zeros(n);
  Genotype target = Genotype::zeros(n);
  target.flip_bit(3);
  target.flip_bit(11);

  RandomStream rng(2);
  const int samples = 1000000;
  int hits = 0;
  for (int i = 0; i < samples; ++i) hits += bitwise_mutation(x, 0.1, rng) == target;
  const double freq = static_cast<double>(hits) / samples;
  const double se = std::sqrt(p_hit * (1.0 - p_hit) / samples);
  CHECK(std::abs(freq - p_hit) < 3.0 * se);
}

TEST_CASE("bitwise_mutation flip count has mean K at P_m = K/n") {
  const int n = 20;
  const int K = 2;
  const double p = static_cast<double>(K) / n;
  const Genotype x = Genotype::zeros(n);
  RandomStream rng(3);
  const int samples = 100000;
  std::int64_t flips = 0;
  for (int i = 0; i < samples; ++i) flips += hamming_distance(x, bitwise_mutation(x, p, rng));
  const double mean = static_cast<double>(flips) / samples;
  const double se = std::sqrt(n * p * (1.0 - p) / samples);
  CHECK(std::abs(mean - K) < 3.0 * se);
}

TEST_CASE("mutation_hit_probability closed form and edge cases") {
  CHECK(mutation_hit_probability(0, 5, 0.0) == 1.0);
  CHECK(mutation_hit_probability(5, 5, 1.0) == 1.0);
  CHECK(mutation_hit_probability(2, 20, 0.1) == doctest::Approx(1.50094635e-3).epsilon(1e-9));
  CHECK_THROWS_AS(mutation_hit_probability(-1, 5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(mutation_hit_probability(6, 5, 0.5), std::invalid_argument);
}

TEST_CASE("mutation_hit_probability is maximized over P_m at delta/n (0.001 grid)") {
  const int n = 20;
  for (const int delta : {1, 2, 5}) {
    double best_p = 0.0;
    double best_value = -1.0;
    for (int i = 1; i <= 999; ++i) {
      const double p = i / 1000.0;
      const double value = mutation_hit_probability(delta, n, p);
      if (value > best_value) {
        best_value = value;
        best_p = p;
      }
    }
    CHECK(best_p == doctest::Approx(static_cast<double>(delta) / n).epsilon(1e-12));
  }
}

TEST_CASE("mutation_hit_bound values and range guard") {
  CHECK(mutation_hit_bound(1, 10) == doctest::Approx(1.0 / (10 * std::numbers::e)).epsilon(1e-12));
  CHECK(mutation_hit_bound(2, 20) ==
        doctest::Approx(std::pow(1.0 / (10 * std::numbers::e), 2)).epsilon(1e-12));
  CHECK_THROWS_AS(mutation_hit_bound(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(mutation_hit_bound(6, 10), std::invalid_argument);  // K > n/2
}

TEST_CASE("mutation_hit_bound is dominated by every in-range hit probability") {
  // Spot check n=20, K=2 as in the worked example...
  const double bound = mutation_hit_bound(2, 20);
  for (int delta = 0; delta <= 2; ++delta) {
    CHECK(mutation_hit_probability(delta, 20, 0.1) >= bound);
  }
  // ...then exhaustively for n <= 64, K <= n/2, delta <= K.
  for (int n = 2; n <= 64; ++n) {
    for (int K = 1; 2 * K <= n; ++K) {
      const double b = mutation_hit_bound(K, n);
      const double rate = static_cast<double>(K) / n;
      for (int delta = 0; delta <= K; ++delta) {
        CHECK(mutation_hit_probability(delta, n, rate) >= b * (1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("uniform_neighbor_mutation is uniform over the neighborhood") {
  const auto onemax = make_onemax(3);
  const Genotype x = Genotype::zeros(3);
  RandomStream rng(4);
  std::map<std::string, std::int64_t> counts;
  for (int i = 0; i < 100000; ++i) {
    ++counts[uniform_neighbor_mutation(*onemax, x, rng).to_string()];
  }
  REQUIRE(counts.size() == 3);
  CHECK(counts.count("100") == 1);
  CHECK(counts.count("010") == 1);
  CHECK(counts.count("001") == 1);
  std::vector<std::int64_t> observed;
  for (const auto& [_, c] : counts) observed.push_back(c);
  CHECK(chi_square_statistic(observed, {1.0 / 3, 1.0 / 3, 1.0 / 3}) < kChiSq99Df2);
}

TEST_CASE("uniform_neighbor_mutation respects feasibility filters and rejects dead ends") {
  TableProblem table(2);
  table.set_infeasible(0b01).set_infeasible(0b10);  // both single flips of 00
  RandomStream rng(5);
  CHECK_THROWS_AS(uniform_neighbor_mutation(table, genotype_from_mask(0b00, 2), rng),
                  std::invalid_argument);
  // Infeasible input has no neighborhood at all.
  CHECK_THROWS_AS(uniform_neighbor_mutation(table, genotype_from_mask(0b01, 2), rng),
                  std::invalid_argument);
}

TEST_CASE("uniform_hamming_ball_draw covers the whole ball uniformly") {
  const Genotype x = Genotype::zeros(4);
  RandomStream rng(6);
  std::map<std::string, std::int64_t> counts;
  const int samples = 140000;
  for (int i = 0; i < samples; ++i) {
    const Genotype y = uniform_hamming_ball_draw(x, 2, rng);
    const int d = hamming_distance(x, y);
    CHECK(d >= 1);
    CHECK(d <= 2);
    ++counts[y.to_string()];
  }
  CHECK(counts.size() == 10);  // C(4,1) + C(4,2)
  for (const auto& [_, c] : counts) {
    const double freq = static_cast<double>(c) / samples;
    CHECK(std::abs(freq - 0.1) < 0.005);
  }
}

TEST_CASE("single_point_crossover copy branch and cut semantics") {
  RandomStream rng(7);
  const Genotype x = Genotype::from_string("000");
  const Genotype y = Genotype::from_string("111");

  const auto [cx, cy] = single_point_crossover(x, y, 0.0, rng);
  CHECK(cx == x);
  CHECK(cy == y);

  // With P_c = 1 and n = 3 the cut point is 1 or 2; both outcomes must show
  // up, and cut 1 yields exactly (011, 100).
  bool saw_cut1 = false;
  bool saw_cut2 = false;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = single_point_crossover(x, y, 1.0, rng);
    if (a == Genotype::from_string("011")) {
      CHECK(b == Genotype::from_string("100"));
      saw_cut1 = true;
    } else {
      CHECK(a == Genotype::from_string("001"));
      CHECK(b == Genotype::from_string("110"));
      saw_cut2 = true;
    }
  }
  CHECK(saw_cut1);
  CHECK(saw_cut2);
}

TEST_CASE("single_point_crossover preserves the column multiset") {
  RandomStream rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const Genotype x = random_genotype(9, rng);
    const Genotype y = random_genotype(9, rng);
    const auto [a, b] = single_point_crossover(x, y, 0.7, rng);
    for (int i = 0; i < 9; ++i) {
      CHECK(std::minmax(a.bit(i), b.bit(i)) == std::minmax(x.bit(i), y.bit(i)));
    }
  }
}

TEST_CASE("single_point_crossover rejects length mismatch and undersized strings") {
  RandomStream rng(9);
  CHECK_THROWS_AS(single_point_crossover(Genotype::from_string("01"),
                                         Genotype::from_string("011"), 0.5, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(single_point_crossover(Genotype::from_string("1"), Genotype::from_string("0"),
                                         0.5, rng),
                  std::invalid_argument);
  // n < 2 is fine when the crossover can only copy.
  CHECK_NOTHROW(single_point_crossover(Genotype::from_string("1"), Genotype::from_string("0"),
                                       0.0, rng));
}

TEST_CASE("verify_crossover_epsilon certifies the configured bounds") {
  const auto onemax = make_onemax(12);
  RandomStream rng(10);

  SUBCASE("identity crossover never loses fitness") {
    CHECK(verify_crossover_epsilon(CrossoverConfig::identity(), *onemax, 20000, rng) == 1.0);
  }

  SUBCASE("single-point stays above 1 - P_c") {
    const double p_c = 0.4;
    const int samples = 100000;
    const double freq =
        verify_crossover_epsilon(CrossoverConfig::single_point(p_c), *onemax, samples, rng);
    const double se = std::sqrt((1.0 - p_c) * p_c / samples);
    CHECK(freq >= (1.0 - p_c) - 3.0 * se);
  }

  SUBCASE("identical parents always succeed") {
    const auto problem = make_onemax(10);
    RandomStream local(11);
    int successes = 0;
    const int samples = 2000;
    for (int i = 0; i < samples; ++i) {
      const Genotype x = random_genotype(10, local);
      const auto [a, b] = single_point_crossover(x, x, 0.9, local);
      const Fitness fx = fitness(*problem, x);
      successes += std::max(fitness(*problem, a), fitness(*problem, b)) >= fx;
    }
    CHECK(successes == samples);
  }
}

TEST_CASE("random_genotype has iid uniform bits") {
  RandomStream rng(12);
  const int samples = 20000;
  std::int64_t ones = 0;
  for (int i = 0; i < samples; ++i) {
    const Genotype g = random_genotype(8, rng);
    for (int b = 0; b < 8; ++b) ones += g.bit(b);
  }
  const double freq = static_cast<double>(ones) / (samples * 8);
  CHECK(std::abs(freq - 0.5) < 0.005);
}
