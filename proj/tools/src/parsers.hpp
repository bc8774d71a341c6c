#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gals/problems.hpp"

namespace gals::cli {

/// Parse failure carrying the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header, then
/// whitespace-separated nonzero literals with a `0` terminating each clause
/// (clauses may span lines). The clause count must match the header and be
/// positive; literals must stay in range.
Cnf parse_dimacs_cnf(std::string_view text);
std::string serialize_dimacs_cnf(const Cnf& cnf);

/// Weighted edge list: header `<vertices> <edges>`, then one `u v w` triple
/// per line with 1-based vertices and positive integer weights. Self-loops,
/// bad weights and count mismatches are rejected with their line number.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& graph);

}  // namespace gals::cli
