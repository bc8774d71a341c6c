#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gals/genotype.hpp"

namespace gals {

/// Hamming-ball neighborhood descriptor. N(x) is the set of feasible y != x
/// with hamming_distance(x, y) <= radius; max_size is the instance's
/// closed-form upper bound on |N(x)| (e.g. exactly n for radius 1 on an
/// unconstrained problem), used to certify mutation hit probabilities.
struct NeighborhoodMapping {
  int radius = 1;
  std::int64_t max_size = 0;
};

/// Maximization problem over {0,1}^n with a feasibility predicate, a
/// non-negative integer objective on feasible genotypes, and a K-bounded
/// Hamming neighborhood.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual int dimension() const = 0;

  virtual bool is_feasible(const Genotype& x) const = 0;
  /// Number of violated constraints; 0 iff x is feasible.
  virtual std::int64_t violation_count(const Genotype& x) const = 0;
  /// Objective value f(x) >= 0. Only defined for feasible x.
  virtual Fitness objective(const Genotype& x) const = 0;
  /// Upper bound on f over all feasible genotypes.
  virtual Fitness objective_upper_bound() const = 0;
  /// An efficiently computable feasible solution, when the instance has one.
  virtual std::optional<Genotype> feasible_seed() const = 0;
  virtual NeighborhoodMapping neighborhood() const = 0;
  /// True when every string in {0,1}^n is feasible (Max-Cut, MAX-SAT, OneMax).
  virtual bool all_strings_feasible() const { return false; }
};

/// Thrown when an exhaustive operation is asked to enumerate more than its
/// guard allows (brute_force is capped at n <= 24).
struct oversize_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Penalized fitness: f(x) for feasible x, otherwise -1 - violation_count(x),
/// which is strictly below every feasible objective value. Uses and fills the
/// genotype's fitness cache.
Fitness fitness(const Problem& problem, const Genotype& x);

/// Visits the feasible neighbors y != x with hamming_distance(x, y) <= radius,
/// ordered lexicographically by flipped-index set (all single flips in index
/// order, then pairs, ...). The visitor returns false to stop early.
/// Rejects infeasible x: neighborhoods are only defined on feasible solutions.
template <typename Visitor>
void for_each_neighbor(const Problem& problem, const Genotype& x, int radius, Visitor&& visit) {
  if (!problem.is_feasible(x)) {
    throw std::invalid_argument("for_each_neighbor: infeasible genotype has no neighborhood");
  }
  const int n = x.size();
  Genotype scratch = x;
  scratch.clear_cached_fitness();
  bool stop = false;
  auto extend = [&](auto&& self, int start, int remaining) -> void {
    for (int i = start; i < n && !stop; ++i) {
      scratch.flip_bit(i);
      if (remaining == 1) {
        if (problem.is_feasible(scratch) &&
            !visit(static_cast<const Genotype&>(scratch))) {
          stop = true;
        }
      } else {
        self(self, i + 1, remaining - 1);
      }
      scratch.flip_bit(i);
    }
  };
  for (int size = 1; size <= radius && size <= n && !stop; ++size) {
    extend(extend, 0, size);
  }
}

/// Materializes the neighborhood N(x) in enumeration order.
std::vector<Genotype> enumerate_neighbors(const Problem& problem, const Genotype& x, int radius);

/// True iff no neighbor strictly improves the objective.
bool is_local_optimum(const Problem& problem, const Genotype& x, int radius);

enum class LocalSearchRule { first_improving, best_improving };

struct LocalSearchResult {
  Genotype optimum;
  std::int64_t steps = 0;
};

/// Ascends from x0 until no neighbor improves. Every step strictly increases
/// the objective, so the step count is bounded by the number of non-optimal
/// objective values. Ties under best_improving go to the first neighbor in
/// enumeration order.
LocalSearchResult local_search(const Problem& problem, const Genotype& x0, int radius,
                               LocalSearchRule rule);

/// Exhaustive oracle over all 2^n genotypes (n <= 24).
struct BruteForceReport {
  Fitness global_optimum_value = 0;
  std::vector<Genotype> local_optima;       // in increasing bitmask order
  std::int64_t m_exact = 0;                 // distinct feasible objective values - 1
  std::vector<Fitness> objective_values;    // sorted distinct feasible values
};

BruteForceReport brute_force(const Problem& problem, int radius);

/// Achieved approximation ratio f(optimum) / f(x) of a local optimum x.
/// Returns +infinity when f(x) = 0 while the optimum is positive. The
/// optimum value is brute-forced when not supplied.
double glo_ratio(const Problem& problem, const Genotype& x,
                 std::optional<Fitness> optimum_value = std::nullopt);

}  // namespace gals
