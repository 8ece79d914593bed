#include "mdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace mdim {

VertexSet::VertexSet(std::initializer_list<Vertex> items) : VertexSet(std::vector<Vertex>(items)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

void VertexSet::merge(const VertexSet& other) {
  std::vector<Vertex> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out));
  items_ = std::move(out);
}

std::string to_string(const VertexSet& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i];
  os << '}';
  return os.str();
}

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoDistance) throw GraphError("vertex count " + std::to_string(n) + " exceeds limit");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge " + pair_text(u, v) + " has an endpoint out of range");
    if (u == v) throw GraphError("edge " + pair_text(u, v) + " is a self-loop");
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  auto dup = std::adjacent_find(normalized.begin(), normalized.end());
  if (dup != normalized.end()) throw GraphError("duplicate edge " + pair_text(dup->first, dup->second));

  Graph g;
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : normalized) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(2 * normalized.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : normalized) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
  g.edges_ = std::move(normalized);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_id(Vertex u, Vertex v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw GraphError("no edge " + pair_text(u, v));
  return static_cast<std::size_t>(it - edges_.begin());
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kNoDistance; });
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw GraphError("invalid source vertex " + std::to_string(source));
  std::vector<Distance> dist(n, kNoDistance);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kNoDistance) {
        dist[w] = static_cast<Distance>(dist[u] + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
      if (it == vertices.end() || *it != w) continue;
      auto j = static_cast<Vertex>(it - vertices.begin());
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return build_graph(vertices.size(), edges);
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.vertex_count()),
      stride_((g.vertex_count() + kRowAlign - 1) / kRowAlign * kRowAlign),
      data_(n_ * stride_, kNoDistance) {
  for (Vertex s = 0; s < n_; ++s) {
    auto dist = bfs_distances(g, s);
    std::copy(dist.begin(), dist.end(), data_.begin() + s * stride_);
  }
}

Distance DistanceMatrix::max_entry() const {
  Distance best = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, at(u, v));
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  if (!is_connected(g)) throw GraphError("graph is not connected");
  return DistanceMatrix(g);
}

}  // namespace mdim
