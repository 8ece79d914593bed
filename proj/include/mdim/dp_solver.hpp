#pragma once

// Bottom-up dynamic program over the rooted component tree.
//
// Every node carries h = (alpha, beta): the sizes of a minimum non-gate-nu-resolving
// set and of a minimum nu-resolving set of the node's subtree graph, where nu is the
// node's own amalgamation vertex (a-nodes) or its parent's (c-nodes). The witnesses
// are kept in original vertex ids so the root's set can be read off directly.

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mdim/decomposition.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

inline constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max();

struct HPair {
  std::size_t alpha = kInfeasible;  // kInfeasible: no non-gate set within the bound
  std::size_t beta = kInfeasible;
  VertexSet witness_nongate;
  VertexSet witness_plain;

  bool alpha_feasible() const { return alpha != kInfeasible; }
};

/// Local view of one c-node: the graph induced by V(c) with its own distances.
struct CNodeProblem {
  Graph local;
  DistanceMatrix dist;
  std::vector<Vertex> to_original;     // ascending, local id i -> original id
  Vertex parent = 0;                   // local id of the parent's amalgamation vertex
  std::vector<Vertex> child_vertices;  // local ids of the children's amalgamation vertices
  std::size_t budget = 0;              // cap on chosen vertices beyond the mandatory ones
};

CNodeProblem make_c_node_problem(const Graph& g, const DebcTree& dt, NodeId c, std::size_t budget);

/// h(c) from the children's pairs (aligned with child_vertices). nullopt when no candidate
/// set fits the budget.
std::optional<HPair> compute_c_node(const CNodeProblem& problem, std::span<const HPair> child_pairs);

/// h(a) from the children's pairs; beta is kInfeasible when no combination of the
/// children fits. Throws std::invalid_argument for an empty list.
HPair compute_a_node(std::span<const HPair> child_pairs);

enum class SolveMode { exact, k_bounded, brute_fallback };
std::string_view to_string(SolveMode mode);

struct Solution {
  std::size_t dimension = 0;
  VertexSet resolving_set;
  /// Component index -> number of resolving vertices inside, for every EBC.
  std::map<std::size_t, std::size_t> per_ebc_counts;
  std::optional<std::size_t> bound_used;
  SolveMode mode = SolveMode::exact;
};

struct SolveOptions {
  /// At most this many resolving vertices inside every EBC.
  std::optional<std::size_t> bound;
  /// Skip the decomposition and run the exponential oracle.
  bool force_brute = false;
  std::size_t brute_limit = kDefaultBruteLimit;
};

class InfeasibleBound : public std::runtime_error {
 public:
  explicit InfeasibleBound(std::size_t bound);
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// Per-node results of one DP run, in tree node order.
struct DpTrace {
  Decomposition decomposition;
  DebcTree tree;
  std::vector<std::optional<HPair>> pairs;
};

/// Runs the DP on a connected graph with at least one amalgamation vertex.
DpTrace run_dp(const Graph& g, std::optional<std::size_t> bound = std::nullopt);

/// Throws GraphError for empty or disconnected input and InfeasibleBound when the bound
/// excludes every resolving set. OracleLimitError signals that exhaustive search was
/// needed above its vertex limit.
Solution solve(const Graph& g, const SolveOptions& options = {});

struct BoundSearch {
  std::size_t k = 0;
  Solution solution;
};

/// Smallest k with a k-EBC-bounded resolving set, trying k = 1, 2, ...
BoundSearch smallest_bound(const Graph& g, std::size_t brute_limit = kDefaultBruteLimit);

/// True when g is a simple path on at least two vertices.
bool is_path_graph(const Graph& g);

}  // namespace mdim
