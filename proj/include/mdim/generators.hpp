#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mdim/graph.hpp"

namespace mdim {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,leaves} with center 0.
Graph star_graph(std::size_t leaves);
/// Triangles {0,1,2} and {2,3,4}.
Graph bowtie_graph();
/// Triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}.
Graph triangle_bridge_triangle_graph();
/// t triangles in a row, consecutive ones sharing a vertex: spine s_0..s_t, apexes x_1..x_t.
Graph triangle_chain_graph(std::size_t t);

/// Connected graph with n vertices and m edges: a random spanning tree plus random extra edges.
/// Deterministic for a given seed on every platform. Throws GraphError if m is out of range.
Graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Bounded draws on std::mt19937_64. The engine's output sequence is fixed by the
/// standard, unlike the std distributions, so results match across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mdim
