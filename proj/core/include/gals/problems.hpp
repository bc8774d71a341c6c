#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gals/problem.hpp"

namespace gals {

/// Undirected weighted edge, 0-based endpoints.
struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 1;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Graph {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Disjunction of nonzero literals; literal +i / -i refers to variable i
/// (1-based), positive / negated.
struct Clause {
  std::vector<int> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Cnf {
  int variable_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Number of ones; the unique radius-1 local optimum is the all-ones string.
std::shared_ptr<const Problem> make_onemax(int n);

/// Total weight of edges whose endpoints land on opposite sides of the
/// bipartition. Rejects malformed input (self-loop, non-positive weight,
/// endpoint out of range) with the offending edge index.
std::shared_ptr<const Problem> make_maxcut(Graph graph);

/// Number of satisfied clauses. Rejects malformed input (empty clause list,
/// empty clause, zero or out-of-range literal) with the offending clause index.
std::shared_ptr<const Problem> make_maxsat(Cnf cnf);

}  // namespace gals
