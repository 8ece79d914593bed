#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

struct ResolveVerdict {
  bool resolving = false;
  /// Lexicographically smallest pair (u < v) with equal distances to every landmark.
  std::optional<Edge> unresolved;

  explicit operator bool() const { return resolving; }
};

/// Pairwise test on a full distance matrix (vector kernels). Throws GraphError for ids out of range.
ResolveVerdict is_resolving_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& r);

/// Same verdict from one BFS per landmark and a sort of the distance vectors;
/// memory is O(|r| n), so it also serves graphs too large for a distance matrix.
ResolveVerdict is_resolving_set(const Graph& g, const VertexSet& r);

/// Hot-path form: no validation, landmarks in any order.
std::optional<Edge> first_unresolved_pair(const DistanceMatrix& dm, std::span<const Vertex> landmarks);

struct GateWitness {
  Vertex gate = 0;
  /// Every out-vertex, by distance to the gate and then by id.
  std::vector<Vertex> out_vertices;
};

/// Out-vertex witness when v is an A-gate. Existence is settled on the neighbors of v
/// (an out-vertex always exists among them); the witness then lists all out-vertices.
std::optional<GateWitness> is_gate(const Graph& g, const DistanceMatrix& dm, const VertexSet& a,
                                   Vertex v);

/// Decision only, O(deg(v) |A|).
bool has_adjacent_out_vertex(const Graph& g, const DistanceMatrix& dm,
                             std::span<const Vertex> a, Vertex v);

struct ResolveConstraints {
  VertexSet must_include;
  /// Requested vertex must not be a gate of the returned set; must be in must_include.
  std::optional<Vertex> non_gate_at;
  std::optional<std::size_t> max_size;
};

inline constexpr std::size_t kDefaultBruteLimit = 25;

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// MDIM_BRUTE_LIMIT when set to a positive integer, kDefaultBruteLimit otherwise.
std::size_t brute_limit_from_env();

/// Minimum resolving set under the constraints, scanning subsets by size and then
/// lexicographically, so the first hit is the answer. nullopt when max_size excludes
/// every candidate. Throws OracleLimitError when n exceeds `vertex_limit`.
std::optional<VertexSet> brute_force_min_resolving(const Graph& g, const DistanceMatrix& dm,
                                                   const ResolveConstraints& c = {},
                                                   std::size_t vertex_limit = kDefaultBruteLimit);

}  // namespace mdim
