#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Hop count. 0xFFFF is reserved for padding and unreachable entries.
using Distance = std::uint16_t;
inline constexpr Distance kNoDistance = 0xFFFF;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> items);
  explicit VertexSet(std::vector<Vertex> items);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  void merge(const VertexSet& other);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<Vertex> items_;
};

std::string to_string(const VertexSet& set);

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically; the index is the edge id.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Id of edge {u, v}; throws GraphError if absent.
  std::size_t edge_id(Vertex u, Vertex v) const;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<Edge> edges_;
};

/// Validates and builds a graph. Rejects out-of-range endpoints, self-loops and duplicate pairs.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g);

/// Hop distances from `source`; unreachable vertices get kNoDistance.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Induced subgraph on `vertices` (sorted). Local id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// All-pairs hop counts. Rows are padded to a multiple of kRowAlign with kNoDistance so
/// the vector kernels can read whole blocks.
class DistanceMatrix {
 public:
  static constexpr std::size_t kRowAlign = 32;

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  std::size_t size() const { return n_; }
  std::size_t stride() const { return stride_; }
  Distance at(Vertex u, Vertex v) const { return data_[u * stride_ + v]; }
  const Distance* row(Vertex u) const { return data_.data() + u * stride_; }
  std::span<const Distance> row_span(Vertex u) const { return {row(u), n_}; }
  Distance max_entry() const;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Distance> data_;
};

/// Throws GraphError when g is disconnected.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace mdim
