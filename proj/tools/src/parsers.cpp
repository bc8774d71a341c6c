#include "parsers.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace gals::cli {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
    if (start > text.size()) break;
  }
  return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, int line, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string(what) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

}  // namespace

Cnf parse_dimacs_cnf(std::string_view text) {
  const auto lines = split_lines(text);
  Cnf cnf;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  int header_line = 0;
  Clause current;
  int last_content_line = 1;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line = static_cast<int>(li) + 1;
    const auto tokens = tokenize(lines[li]);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0].size() >= 1 && tokens[0][0] == 'c' && tokens[0] != "c") continue;
    last_content_line = line;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ParseError(line, "expected header 'p cnf <vars> <clauses>'");
      }
      const std::int64_t vars = parse_int(tokens[2], line, "variable count");
      declared_clauses = parse_int(tokens[3], line, "clause count");
      if (vars < 1) throw ParseError(line, "variable count must be positive");
      if (declared_clauses < 1) throw ParseError(line, "header declares no clauses");
      cnf.variable_count = static_cast<int>(vars);
      have_header = true;
      header_line = line;
      continue;
    }
    if (!have_header) throw ParseError(line, "clause data before 'p cnf' header");
    for (const auto token : tokens) {
      const std::int64_t lit = parse_int(token, line, "literal");
      if (lit == 0) {
        if (current.literals.empty()) throw ParseError(line, "empty clause");
        if (static_cast<std::int64_t>(cnf.clauses.size()) == declared_clauses) {
          throw ParseError(line, "more clauses than the header declares");
        }
        cnf.clauses.push_back(std::move(current));
        current = Clause{};
        continue;
      }
      const std::int64_t var = lit > 0 ? lit : -lit;
      if (var > cnf.variable_count) {
        throw ParseError(line, "literal " + std::to_string(lit) + " out of range (" +
                                   std::to_string(cnf.variable_count) + " variables)");
      }
      current.literals.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) throw ParseError(last_content_line, "missing 'p cnf' header");
  if (!current.literals.empty()) {
    throw ParseError(last_content_line, "unterminated clause (missing 0)");
  }
  if (static_cast<std::int64_t>(cnf.clauses.size()) != declared_clauses) {
    throw ParseError(header_line,
                     "clause count mismatch: header declares " + std::to_string(declared_clauses) +
                         ", found " + std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string serialize_dimacs_cnf(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (const int lit : clause.literals) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  Graph graph;
  bool have_header = false;
  std::int64_t declared_edges = 0;
  int header_line = 0;
  int last_content_line = 1;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line = static_cast<int>(li) + 1;
    const auto tokens = tokenize(lines[li]);
    if (tokens.empty()) continue;
    last_content_line = line;
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line, "expected header '<vertices> <edges>'");
      const std::int64_t vertices = parse_int(tokens[0], line, "vertex count");
      declared_edges = parse_int(tokens[1], line, "edge count");
      if (vertices < 1) throw ParseError(line, "vertex count must be positive");
      if (declared_edges < 0) throw ParseError(line, "edge count must be non-negative");
      graph.vertex_count = static_cast<int>(vertices);
      have_header = true;
      header_line = line;
      continue;
    }
    if (tokens.size() != 3) throw ParseError(line, "expected edge '<u> <v> <weight>'");
    if (static_cast<std::int64_t>(graph.edges.size()) == declared_edges) {
      throw ParseError(line, "more edges than the header declares");
    }
    const std::int64_t u = parse_int(tokens[0], line, "vertex");
    const std::int64_t v = parse_int(tokens[1], line, "vertex");
    const std::int64_t weight = parse_int(tokens[2], line, "weight");
    if (u < 1 || u > graph.vertex_count) {
      throw ParseError(line, "vertex " + std::to_string(u) + " out of range");
    }
    if (v < 1 || v > graph.vertex_count) {
      throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
    }
    if (u == v) throw ParseError(line, "self-loop");
    if (weight < 1) throw ParseError(line, "weight must be a positive integer");
    graph.edges.push_back({static_cast<int>(u) - 1, static_cast<int>(v) - 1, weight});
  }
  if (!have_header) throw ParseError(last_content_line, "missing '<vertices> <edges>' header");
  if (static_cast<std::int64_t>(graph.edges.size()) != declared_edges) {
    throw ParseError(header_line,
                     "edge count mismatch: header declares " + std::to_string(declared_edges) +
                         ", found " + std::to_string(graph.edges.size()));
  }
  return graph;
}

std::string serialize_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << graph.vertex_count << ' ' << graph.edges.size() << '\n';
  for (const auto& e : graph.edges) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  }
  return out.str();
}

}  // namespace gals::cli
