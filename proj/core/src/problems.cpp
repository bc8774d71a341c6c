#include "gals/problems.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace gals {
namespace {

/// Common base for the bundled problems: the whole search space is feasible,
/// the all-zeros string serves as the trivial seed, and the neighborhood is
/// the radius-1 Hamming ball (|N(x)| = n exactly).
class UnconstrainedProblem : public Problem {
 public:
  explicit UnconstrainedProblem(int n) : n_(n) {}

  int dimension() const override { return n_; }
  bool is_feasible(const Genotype&) const override { return true; }
  std::int64_t violation_count(const Genotype&) const override { return 0; }
  std::optional<Genotype> feasible_seed() const override { return Genotype::zeros(n_); }
  NeighborhoodMapping neighborhood() const override { return {1, n_}; }
  bool all_strings_feasible() const override { return true; }

 protected:
  int n_;
};

class OneMaxProblem final : public UnconstrainedProblem {
 public:
  explicit OneMaxProblem(int n) : UnconstrainedProblem(n) {}

  std::string name() const override { return "onemax"; }
  Fitness objective(const Genotype& x) const override {
    Fitness ones = 0;
    for (int i = 0; i < x.size(); ++i) ones += x.bit(i);
    return ones;
  }
  Fitness objective_upper_bound() const override { return n_; }
};

class MaxCutProblem final : public UnconstrainedProblem {
 public:
  explicit MaxCutProblem(Graph graph)
      : UnconstrainedProblem(graph.vertex_count), graph_(std::move(graph)) {
    total_weight_ = 0;
    for (const auto& e : graph_.edges) total_weight_ += e.weight;
  }

  std::string name() const override { return "maxcut"; }
  Fitness objective(const Genotype& x) const override {
    Fitness cut = 0;
    for (const auto& e : graph_.edges) {
      if (x.bit(e.u) != x.bit(e.v)) cut += e.weight;
    }
    return cut;
  }
  Fitness objective_upper_bound() const override { return total_weight_; }

 private:
  Graph graph_;
  Fitness total_weight_ = 0;
};

class MaxSatProblem final : public UnconstrainedProblem {
 public:
  explicit MaxSatProblem(Cnf cnf)
      : UnconstrainedProblem(cnf.variable_count), cnf_(std::move(cnf)) {}

  std::string name() const override { return "maxsat"; }
  Fitness objective(const Genotype& x) const override {
    Fitness satisfied = 0;
    for (const auto& clause : cnf_.clauses) {
      for (const int lit : clause.literals) {
        const int var = lit > 0 ? lit : -lit;
        if (x.bit(var - 1) == (lit > 0 ? 1 : 0)) {
          ++satisfied;
          break;
        }
      }
    }
    return satisfied;
  }
  Fitness objective_upper_bound() const override {
    return static_cast<Fitness>(cnf_.clauses.size());
  }

 private:
  Cnf cnf_;
};

}  // namespace

std::shared_ptr<const Problem> make_onemax(int n) {
  if (n < 1) throw std::invalid_argument("make_onemax: dimension must be positive");
  return std::make_shared<OneMaxProblem>(n);
}

std::shared_ptr<const Problem> make_maxcut(Graph graph) {
  if (graph.vertex_count < 1) {
    throw std::invalid_argument("make_maxcut: vertex count must be positive");
  }
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    const std::string at = "make_maxcut: edge " + std::to_string(i) + ": ";
    if (e.u < 0 || e.u >= graph.vertex_count || e.v < 0 || e.v >= graph.vertex_count) {
      throw std::invalid_argument(at + "endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument(at + "self-loop");
    if (e.weight < 1) throw std::invalid_argument(at + "weight must be a positive integer");
  }
  return std::make_shared<MaxCutProblem>(std::move(graph));
}

std::shared_ptr<const Problem> make_maxsat(Cnf cnf) {
  if (cnf.variable_count < 1) {
    throw std::invalid_argument("make_maxsat: variable count must be positive");
  }
  if (cnf.clauses.empty()) throw std::invalid_argument("make_maxsat: clause list is empty");
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const std::string at = "make_maxsat: clause " + std::to_string(i) + ": ";
    if (cnf.clauses[i].literals.empty()) throw std::invalid_argument(at + "empty clause");
    for (const int lit : cnf.clauses[i].literals) {
      if (lit == 0) throw std::invalid_argument(at + "zero literal");
      const int var = lit > 0 ? lit : -lit;
      if (var > cnf.variable_count) {
        throw std::invalid_argument(at + "literal " + std::to_string(lit) + " out of range");
      }
    }
  }
  return std::make_shared<MaxSatProblem>(std::move(cnf));
}

}  // namespace gals
