#include "gals/problem.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gals {

Fitness fitness(const Problem& problem, const Genotype& x) {
  if (x.size() != problem.dimension()) {
    throw std::invalid_argument("fitness: genotype length " + std::to_string(x.size()) +
                                " does not match instance dimension " +
                                std::to_string(problem.dimension()));
  }
  if (const auto cached = x.cached_fitness()) return *cached;
  const Fitness f = problem.is_feasible(x) ? problem.objective(x)
                                           : Fitness{-1} - problem.violation_count(x);
  x.set_cached_fitness(f);
  return f;
}

std::vector<Genotype> enumerate_neighbors(const Problem& problem, const Genotype& x, int radius) {
  std::vector<Genotype> out;
  for_each_neighbor(problem, x, radius, [&](const Genotype& y) {
    out.push_back(y);
    return true;
  });
  return out;
}

bool is_local_optimum(const Problem& problem, const Genotype& x, int radius) {
  if (!problem.is_feasible(x)) {
    throw std::invalid_argument("is_local_optimum: genotype is infeasible");
  }
  const Fitness fx = problem.objective(x);
  bool improving = false;
  for_each_neighbor(problem, x, radius, [&](const Genotype& y) {
    if (problem.objective(y) > fx) {
      improving = true;
      return false;
    }
    return true;
  });
  return !improving;
}

LocalSearchResult local_search(const Problem& problem, const Genotype& x0, int radius,
                               LocalSearchRule rule) {
  if (!problem.is_feasible(x0)) {
    throw std::invalid_argument("local_search: start genotype is infeasible");
  }
  Genotype current = x0;
  Fitness f_current = problem.objective(current);
  std::int64_t steps = 0;
  for (;;) {
    std::optional<Genotype> best;
    Fitness f_best = f_current;
    for_each_neighbor(problem, current, radius, [&](const Genotype& y) {
      const Fitness fy = problem.objective(y);
      if (fy > f_best) {
        best = y;
        f_best = fy;
        if (rule == LocalSearchRule::first_improving) return false;
      }
      return true;
    });
    if (!best) break;
    current = std::move(*best);
    f_current = f_best;
    ++steps;
  }
  return {std::move(current), steps};
}

BruteForceReport brute_force(const Problem& problem, int radius) {
  const int n = problem.dimension();
  if (n > 24) {
    throw oversize_error("brute_force: dimension " + std::to_string(n) +
                         " exceeds the n <= 24 enumeration guard");
  }
  BruteForceReport report;
  std::set<Fitness> values;
  bool any_feasible = false;
  const std::uint32_t total = 1u << n;
  Genotype g = Genotype::zeros(n);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < n; ++i) g.set_bit(i, static_cast<std::uint8_t>((mask >> i) & 1u));
    if (!problem.is_feasible(g)) continue;
    any_feasible = true;
    const Fitness f = problem.objective(g);
    values.insert(f);
    if (is_local_optimum(problem, g, radius)) report.local_optima.push_back(g);
  }
  if (!any_feasible) throw std::domain_error("brute_force: instance has no feasible genotype");
  report.objective_values.assign(values.begin(), values.end());
  report.global_optimum_value = report.objective_values.back();
  report.m_exact = static_cast<std::int64_t>(report.objective_values.size()) - 1;
  return report;
}

double glo_ratio(const Problem& problem, const Genotype& x, std::optional<Fitness> optimum_value) {
  const int radius = problem.neighborhood().radius;
  if (!is_local_optimum(problem, x, radius)) {
    throw std::invalid_argument("glo_ratio: genotype is not a local optimum");
  }
  const Fitness optimum =
      optimum_value ? *optimum_value : brute_force(problem, radius).global_optimum_value;
  const Fitness fx = problem.objective(x);
  if (fx == optimum) return 1.0;
  if (fx == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(optimum) / static_cast<double>(fx);
}

}  // namespace gals
