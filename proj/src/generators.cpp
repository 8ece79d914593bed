#include "mdim/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace mdim {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, edges);
}

Graph bowtie_graph() { return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

Graph triangle_bridge_triangle_graph() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

Graph triangle_chain_graph(std::size_t t) {
  // Spine vertex s_i is 2i, apex x_i is 2i-1.
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= t; ++i) {
    const Vertex left = 2 * (i - 1), apex = 2 * i - 1, right = 2 * i;
    edges.emplace_back(left, right);
    edges.emplace_back(left, apex);
    edges.emplace_back(apex, right);
  }
  return build_graph(2 * t + 1, edges);
}

Graph random_connected_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw GraphError("random graph needs at least one vertex");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m + 1 < n || m > max_edges)
    throw GraphError("edge count " + std::to_string(m) + " impossible for a connected graph on " +
                     std::to_string(n) + " vertices");
  SeededRng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::set<Edge> chosen;
  for (std::size_t i = 1; i < n; ++i) {
    Vertex u = order[i], v = order[rng.below(i)];
    chosen.emplace(std::min(u, v), std::max(u, v));
  }
  if (m > max_edges / 2) {
    // Dense request: sample from the explicit complement.
    std::vector<Edge> rest;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!chosen.count({u, v})) rest.emplace_back(u, v);
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng.below(i)]);
    for (std::size_t i = 0; chosen.size() < m; ++i) chosen.insert(rest[i]);
  } else {
    while (chosen.size() < m) {
      auto u = static_cast<Vertex>(rng.below(n));
      auto v = static_cast<Vertex>(rng.below(n));
      if (u != v) chosen.emplace(std::min(u, v), std::max(u, v));
    }
  }
  std::vector<Edge> edges(chosen.begin(), chosen.end());
  return build_graph(n, edges);
}

}  // namespace mdim
