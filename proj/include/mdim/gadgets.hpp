#pragma once

// Hardness instances: a 3-CNF formula turned into a graph whose metric dimension is
// n + m exactly when the formula is satisfiable.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

struct Literal {
  std::size_t variable = 0;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Formula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DIMACS CNF with exactly three distinct variables per clause. The clause count must
/// match the header.
Formula parse_dimacs_cnf(std::string_view text);

/// Exhaustive check over all 2^num_vars assignments.
bool is_satisfiable(const Formula& f);

struct GadgetGraph {
  Graph graph;
  std::map<std::string, Vertex> labels;

  Vertex at(const std::string& label) const;
};

/// Per-variable gadget size: T, F and eight interior nodes.
inline constexpr std::size_t kVariableGadgetSize = 10;
inline constexpr std::size_t kClauseGadgetSize = 5;

/// Throws FormulaError when the formula has no clause or no variable.
GadgetGraph reduce_to_graph(const Formula& f);

/// Interior vertices a_i^1..a_i^4, b_i^1..b_i^4 of variable i (1-based).
std::vector<Vertex> variable_interior(std::size_t variable);
/// c_j^q for clause j and q in 1..5 (both 1-based), given the number of variables.
Vertex clause_vertex(std::size_t num_vars, std::size_t clause, std::size_t q);

/// {"T1": 0, ...} ordered by vertex id.
std::string labels_json(const GadgetGraph& gg);

}  // namespace mdim
