#include "mdim/resolving.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>

#include "mdim/kernels.hpp"

namespace mdim {

namespace {

void validate(const Graph& g, const VertexSet& r) {
  for (Vertex v : r)
    if (v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

// Row pointers for up to a few dozen landmarks without touching the heap.
class RowList {
 public:
  explicit RowList(std::size_t count) {
    if (count > inline_.size()) heap_.resize(count);
    ptr_ = count > inline_.size() ? heap_.data() : inline_.data();
  }
  const Distance*& operator[](std::size_t i) { return ptr_[i]; }
  const Distance* const* data() const { return ptr_; }

 private:
  std::array<const Distance*, 48> inline_{};
  std::vector<const Distance*> heap_;
  const Distance** ptr_;
};

class KeyList {
 public:
  explicit KeyList(std::size_t count) {
    if (count > inline_.size()) heap_.resize(count);
    ptr_ = count > inline_.size() ? heap_.data() : inline_.data();
  }
  Distance& operator[](std::size_t i) { return ptr_[i]; }
  const Distance* data() const { return ptr_; }

 private:
  std::array<Distance, 48> inline_{};
  std::vector<Distance> heap_;
  Distance* ptr_;
};

}  // namespace

std::optional<Edge> first_unresolved_pair(const DistanceMatrix& dm, std::span<const Vertex> landmarks) {
  const std::size_t n = dm.size();
  const std::size_t count = landmarks.size();
  const auto& k = kernels::active();
  RowList rows(count);
  KeyList keys(count);
  for (std::size_t i = 0; i < count; ++i) rows[i] = dm.row(landmarks[i]);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t i = 0; i < count; ++i) keys[i] = rows[i][u];
    const std::size_t v = k.first_tied(rows.data(), keys.data(), count, u + 1, n);
    if (v < n) return Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)};
  }
  return std::nullopt;
}

ResolveVerdict is_resolving_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& r) {
  validate(g, r);
  auto pair = first_unresolved_pair(dm, r.items());
  return {!pair.has_value(), pair};
}

ResolveVerdict is_resolving_set(const Graph& g, const VertexSet& r) {
  validate(g, r);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Distance>> rows;
  rows.reserve(r.size());
  for (Vertex w : r) rows.push_back(bfs_distances(g, w));

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto less = [&](Vertex a, Vertex b) {
    for (const auto& row : rows)
      if (row[a] != row[b]) return row[a] < row[b];
    return a < b;
  };
  auto same = [&](Vertex a, Vertex b) {
    return std::all_of(rows.begin(), rows.end(), [&](const auto& row) { return row[a] == row[b]; });
  };
  std::sort(order.begin(), order.end(), less);
  std::optional<Edge> best;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // Within a run of equal vectors the ids ascend, so the first two form its smallest pair.
    if (same(order[i], order[i + 1]) && (i == 0 || !same(order[i - 1], order[i]))) {
      Edge e{order[i], order[i + 1]};
      if (!best || e < *best) best = e;
    }
  }
  return {!best.has_value(), best};
}

bool has_adjacent_out_vertex(const Graph& g, const DistanceMatrix& dm, std::span<const Vertex> a,
                             Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    bool all = true;
    for (Vertex w : a) {
      if (dm.at(u, w) != dm.at(v, w) + 1) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::optional<GateWitness> is_gate(const Graph& g, const DistanceMatrix& dm, const VertexSet& a,
                                   Vertex v) {
  validate(g, a);
  if (v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  if (!has_adjacent_out_vertex(g, dm, a.items(), v)) return std::nullopt;

  const std::size_t n = dm.size();
  RowList rows(a.size());
  KeyList offsets(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows[i] = dm.row(a[i]);
    offsets[i] = dm.at(v, a[i]);
  }
  std::vector<std::uint32_t> bits((n + 31) / 32);
  kernels::active().through_mask(rows.data(), dm.row(v), offsets.data(), a.size(), n, bits.data());

  GateWitness witness{v, {}};
  for (Vertex u = 0; u < n; ++u)
    if (u != v && (bits[u / 32] >> (u % 32) & 1u)) witness.out_vertices.push_back(u);
  std::stable_sort(witness.out_vertices.begin(), witness.out_vertices.end(),
                   [&](Vertex x, Vertex y) { return dm.at(v, x) < dm.at(v, y); });
  return witness;
}

std::size_t brute_limit_from_env() {
  if (const char* env = std::getenv("MDIM_BRUTE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultBruteLimit;
}

std::optional<VertexSet> brute_force_min_resolving(const Graph& g, const DistanceMatrix& dm,
                                                   const ResolveConstraints& c,
                                                   std::size_t vertex_limit) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_limit)
    throw OracleLimitError("brute force refuses " + std::to_string(n) + " vertices (limit " +
                           std::to_string(vertex_limit) + ")");
  validate(g, c.must_include);
  if (c.non_gate_at && !c.must_include.contains(*c.non_gate_at))
    throw GraphError("non-gate vertex must be one of the required vertices");

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (!c.must_include.contains(v)) pool.push_back(v);
  const std::size_t fixed = c.must_include.size();
  std::size_t max_extra = pool.size();
  if (c.max_size) {
    if (*c.max_size < fixed) return std::nullopt;
    max_extra = std::min(max_extra, *c.max_size - fixed);
  }

  std::vector<Vertex> landmarks(c.must_include.begin(), c.must_include.end());
  std::vector<std::size_t> idx;
  for (std::size_t extra = 0; extra <= max_extra; ++extra) {
    idx.resize(extra);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      landmarks.resize(fixed);
      for (std::size_t i : idx) landmarks.push_back(pool[i]);
      if (!first_unresolved_pair(dm, landmarks) &&
          !(c.non_gate_at && has_adjacent_out_vertex(g, dm, landmarks, *c.non_gate_at)))
        return VertexSet(landmarks);
      // Next combination in lexicographic order.
      std::size_t i = extra;
      while (i > 0 && idx[i - 1] == pool.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace mdim
