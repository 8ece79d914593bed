#pragma once

// Edge-list text: a header line "n <count>", then one "u v" pair per line.
// '#' starts a comment; blank lines are ignored.

#include <string>
#include <string_view>

#include "mdim/graph.hpp"

namespace mdim {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError naming the line and token, or GraphError for invalid edges.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

}  // namespace mdim
