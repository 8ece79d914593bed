#pragma once

#include <algorithm>
#include <cstdint>

#include "mdim/generators.hpp"

namespace support {

/// Connected graph with n in [lo, hi] and an edge count anywhere between a tree and
/// roughly `density` times n extra edges. Same seed, same graph.
inline mdim::Graph random_graph(std::uint64_t seed, std::size_t lo, std::size_t hi,
                                std::size_t density = 2) {
  mdim::SeededRng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::size_t n = lo + rng.below(hi - lo + 1);
  const std::size_t max_m = n * (n - 1) / 2;
  const std::size_t span = std::min(max_m - (n - 1), density * n / 2) + 1;
  const std::size_t m = n - 1 + rng.below(span);
  return mdim::random_connected_graph(n, m, seed);
}

}  // namespace support
