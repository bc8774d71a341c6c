#pragma once

// Shared test-only helpers: table-driven and vertex-cover problems for
// exercising constrained/penalty paths, random instance generators, and the
// independent statistics used as oracles (exact tournament distribution,
// chi-square machinery).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gals/genotype.hpp"
#include "gals/problem.hpp"
#include "gals/problems.hpp"
#include "gals/random.hpp"

namespace gals::testing {

inline Genotype genotype_from_mask(std::uint32_t mask, int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  return Genotype(std::move(bits));
}

inline std::uint32_t mask_of(const Genotype& g) {
  std::uint32_t mask = 0;
  for (int i = 0; i < g.size(); ++i) mask |= static_cast<std::uint32_t>(g.bit(i)) << i;
  return mask;
}

/// Fully explicit problem over a small search space: per-genotype objective,
/// feasibility and violation counts are table entries. Handy for pinning
/// penalty values, infeasible neighbors, and degenerate landscapes.
class TableProblem final : public Problem {
 public:
  explicit TableProblem(int n, Fitness default_objective = 0)
      : n_(n),
        feasible_(std::size_t{1} << n, 1),
        objective_(std::size_t{1} << n, default_objective),
        violations_(std::size_t{1} << n, 0) {}

  TableProblem& set_objective(std::uint32_t mask, Fitness f) {
    objective_[mask] = f;
    return *this;
  }
  TableProblem& set_infeasible(std::uint32_t mask, std::int64_t violation_count = 1) {
    feasible_[mask] = 0;
    violations_[mask] = violation_count;
    return *this;
  }
  TableProblem& set_seed(std::uint32_t mask) {
    seed_mask_ = mask;
    return *this;
  }
  TableProblem& set_radius(int radius) {
    radius_ = radius;
    return *this;
  }

  std::string name() const override { return "table"; }
  int dimension() const override { return n_; }
  bool is_feasible(const Genotype& x) const override { return feasible_[mask_of(x)] != 0; }
  std::int64_t violation_count(const Genotype& x) const override { return violations_[mask_of(x)]; }
  Fitness objective(const Genotype& x) const override { return objective_[mask_of(x)]; }
  Fitness objective_upper_bound() const override {
    Fitness bound = 0;
    for (std::size_t m = 0; m < objective_.size(); ++m) {
      if (feasible_[m]) bound = std::max(bound, objective_[m]);
    }
    return bound;
  }
  std::optional<Genotype> feasible_seed() const override {
    if (!seed_mask_) return std::nullopt;
    return genotype_from_mask(*seed_mask_, n_);
  }
  NeighborhoodMapping neighborhood() const override { return {radius_, n_}; }
  bool all_strings_feasible() const override {
    for (const auto f : feasible_) {
      if (!f) return false;
    }
    return true;
  }

 private:
  int n_;
  int radius_ = 1;
  std::optional<std::uint32_t> seed_mask_;
  std::vector<std::uint8_t> feasible_;
  std::vector<Fitness> objective_;
  std::vector<std::int64_t> violations_;
};

/// Minimum vertex cover as a maximization problem: feasible assignments cover
/// every edge, the objective rewards small covers (n - |cover|), violations
/// count uncovered edges. Exercises the constrained-instance machinery the
/// bundled problems never touch.
class VertexCoverProblem final : public Problem {
 public:
  VertexCoverProblem(int n, std::vector<std::pair<int, int>> edges)
      : n_(n), edges_(std::move(edges)) {}

  std::string name() const override { return "vertex-cover"; }
  int dimension() const override { return n_; }
  bool is_feasible(const Genotype& x) const override { return violation_count(x) == 0; }
  std::int64_t violation_count(const Genotype& x) const override {
    std::int64_t uncovered = 0;
    for (const auto& [u, v] : edges_) {
      if (x.bit(u) == 0 && x.bit(v) == 0) ++uncovered;
    }
    return uncovered;
  }
  Fitness objective(const Genotype& x) const override {
    Fitness ones = 0;
    for (int i = 0; i < n_; ++i) ones += x.bit(i);
    return n_ - ones;
  }
  Fitness objective_upper_bound() const override { return n_; }
  std::optional<Genotype> feasible_seed() const override { return Genotype::ones(n_); }
  NeighborhoodMapping neighborhood() const override { return {1, n_}; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

inline Graph random_maxcut_graph(int n, double edge_prob, int max_weight, RandomStream& rng) {
  Graph g;
  g.vertex_count = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_bernoulli(edge_prob)) {
        g.edges.push_back({u, v, 1 + static_cast<std::int64_t>(
                                      rng.next_below(static_cast<std::uint32_t>(max_weight)))});
      }
    }
  }
  if (g.edges.empty()) g.edges.push_back({0, 1, 1});
  return g;
}

inline Cnf random_cnf(int n, int clause_count, int literals_per_clause, RandomStream& rng) {
  Cnf cnf;
  cnf.variable_count = n;
  for (int c = 0; c < clause_count; ++c) {
    Clause clause;
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < literals_per_clause) {
      const int var = 1 + static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
      bool used = false;
      for (const int v : vars) used = used || v == var;
      if (!used) vars.push_back(var);
    }
    for (const int var : vars) {
      clause.literals.push_back(rng.next_bernoulli(0.5) ? var : -var);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

/// Exact selection distribution of a k-tournament over the given fitness
/// profile: enumerate all lambda^k ordered draw tuples, split ties uniformly
/// among the drawn maximal slots. Independent of the library implementation.
inline std::vector<double> exact_tournament_distribution(const std::vector<Fitness>& fitnesses,
                                                         int k) {
  const int lambda = static_cast<int>(fitnesses.size());
  std::vector<double> prob(static_cast<std::size_t>(lambda), 0.0);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  double tuple_mass = 1.0;
  for (int i = 0; i < k; ++i) tuple_mass /= lambda;
  for (;;) {
    Fitness best = fitnesses[static_cast<std::size_t>(tuple[0])];
    for (const int idx : tuple) best = std::max(best, fitnesses[static_cast<std::size_t>(idx)]);
    int maximal_slots = 0;
    for (const int idx : tuple) maximal_slots += fitnesses[static_cast<std::size_t>(idx)] == best;
    for (const int idx : tuple) {
      if (fitnesses[static_cast<std::size_t>(idx)] == best) {
        prob[static_cast<std::size_t>(idx)] += tuple_mass / maximal_slots;
      }
    }
    int pos = k - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == lambda - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return prob;
}

inline double chi_square_statistic(const std::vector<std::int64_t>& observed,
                                   const std::vector<double>& expected_probs) {
  if (observed.size() != expected_probs.size()) {
    throw std::invalid_argument("chi_square_statistic: size mismatch");
  }
  std::int64_t total = 0;
  for (const auto o : observed) total += o;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = expected_probs[i] * static_cast<double>(total);
    const double diff = static_cast<double>(observed[i]) - expected;
    chi2 += diff * diff / expected;
  }
  return chi2;
}

// Upper 1% critical values of the chi-square distribution.
inline constexpr double kChiSq99Df2 = 9.21034;
inline constexpr double kChiSq99Df3 = 11.3449;
inline constexpr double kChiSq99Df7 = 18.4753;

}  // namespace gals::testing
