#include "mdim/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::ebc: return "ebc";
    case ComponentKind::bridge: return "bridge";
    case ComponentKind::ordinary_leg: return "ordinary_leg";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct BlockAssignment {
  std::vector<std::size_t> edge_block;           // per edge id
  std::vector<std::vector<std::size_t>> blocks;  // edge ids per block
};

// Iterative edge-stack variant of the Hopcroft-Tarjan block algorithm.
BlockAssignment assign_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  BlockAssignment out;
  out.edge_block.assign(g.edge_count(), kNone);
  if (n == 0) return out;

  std::vector<std::size_t> disc(n, kNone), low(n, 0);
  struct Frame {
    Vertex v;
    std::size_t parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<std::size_t> edge_stack;
  std::size_t clock = 0;

  disc[0] = low[0] = clock++;
  stack.push_back({0, kNone, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    auto nb = g.neighbors(v);
    if (f.next < nb.size()) {
      const Vertex w = nb[f.next++];
      const std::size_t e = g.edge_id(v, w);
      if (e == f.parent_edge) continue;
      if (disc[w] == kNone) {
        edge_stack.push_back(e);
        disc[w] = low[w] = clock++;
        stack.push_back({w, e, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const std::size_t parent_edge = f.parent_edge;
    stack.pop_back();
    if (stack.empty()) break;
    const Vertex p = stack.back().v;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      std::vector<std::size_t> block;
      std::size_t e;
      do {
        e = edge_stack.back();
        edge_stack.pop_back();
        out.edge_block[e] = out.blocks.size();
        block.push_back(e);
      } while (e != parent_edge);
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

VertexSet block_vertices(const Graph& g, const std::vector<std::size_t>& edge_ids) {
  std::vector<Vertex> vs;
  for (std::size_t e : edge_ids) {
    vs.push_back(g.edges()[e].first);
    vs.push_back(g.edges()[e].second);
  }
  return VertexSet(std::move(vs));
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw GraphError("graph is not connected");
}

std::vector<Leg> legs_with_blocks(const Graph& g, const BlockAssignment& blocks) {
  const std::size_t n = g.vertex_count();
  std::vector<Leg> legs;
  bool has_branch = false;
  for (Vertex v = 0; v < n; ++v) has_branch |= g.degree(v) >= 3;
  if (!has_branch) return legs;

  for (Vertex leaf = 0; leaf < n; ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Leg leg;
    leg.vertices.push_back(leaf);
    Vertex prev = leaf, cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      leg.vertices.push_back(cur);
      auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    leg.vertices.push_back(cur);
    // Hooked iff the root's remaining edges all lie in one biconnected block.
    const std::size_t leg_edge = g.edge_id(prev, cur);
    std::size_t block = kNone;
    bool single = true;
    for (Vertex w : g.neighbors(cur)) {
      const std::size_t e = g.edge_id(cur, w);
      if (e == leg_edge) continue;
      if (block == kNone) block = blocks.edge_block[e];
      else if (blocks.edge_block[e] != block) single = false;
    }
    single = single && block != kNone && blocks.blocks[block].size() >= 3;
    leg.kind = single ? LegKind::hooked : LegKind::ordinary;
    legs.push_back(std::move(leg));
  }
  return legs;
}

}  // namespace

std::vector<VertexSet> biconnected_components(const Graph& g) {
  if (g.vertex_count() == 0) throw GraphError("graph has no vertices");
  require_connected(g);
  auto blocks = assign_blocks(g);
  std::vector<VertexSet> out;
  for (const auto& b : blocks.blocks) {
    if (b.size() >= 3) out.push_back(block_vertices(g, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Leg> classify_legs(const Graph& g) {
  require_connected(g);
  return legs_with_blocks(g, assign_blocks(g));
}

Decomposition decompose(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw GraphError("decomposition needs at least two vertices");
  require_connected(g);
  const auto blocks = assign_blocks(g);
  const auto legs = legs_with_blocks(g, blocks);

  std::vector<bool> leg_edge(g.edge_count(), false);
  for (const Leg& leg : legs)
    for (std::size_t i = 0; i + 1 < leg.vertices.size(); ++i)
      leg_edge[g.edge_id(leg.vertices[i], leg.vertices[i + 1])] = true;

  struct Draft {
    Component component;
    std::vector<std::size_t> edges;
  };
  std::vector<Draft> drafts;
  std::vector<std::size_t> block_draft(blocks.blocks.size(), kNone);
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
    const auto& edge_ids = blocks.blocks[b];
    if (edge_ids.size() == 1) {
      if (leg_edge[edge_ids[0]]) continue;
      auto vs = block_vertices(g, edge_ids);
      drafts.push_back({{ComponentKind::bridge, vs, vs}, edge_ids});
    } else {
      auto vs = block_vertices(g, edge_ids);
      block_draft[b] = drafts.size();
      drafts.push_back({{ComponentKind::ebc, vs, vs}, edge_ids});
    }
  }
  for (const Leg& leg : legs) {
    std::vector<std::size_t> edge_ids;
    for (std::size_t i = 0; i + 1 < leg.vertices.size(); ++i)
      edge_ids.push_back(g.edge_id(leg.vertices[i], leg.vertices[i + 1]));
    if (leg.kind == LegKind::hooked) {
      const Vertex root = leg.root();
      std::size_t host = kNone;
      for (Vertex w : g.neighbors(root)) {
        const std::size_t e = g.edge_id(root, w);
        if (!leg_edge[e]) host = block_draft[blocks.edge_block[e]];
      }
      Draft& d = drafts[host];
      for (Vertex v : leg.vertices) d.component.vertices.insert(v);
      d.edges.insert(d.edges.end(), edge_ids.begin(), edge_ids.end());
    } else {
      VertexSet vs(leg.vertices);
      drafts.push_back({{ComponentKind::ordinary_leg, vs, vs}, std::move(edge_ids)});
    }
  }

  std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
    return a.component.vertices < b.component.vertices;
  });

  Decomposition d;
  d.edge_owner.assign(g.edge_count(), kNone);
  std::vector<std::size_t> membership(n, 0);
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    for (std::size_t e : drafts[i].edges) d.edge_owner[e] = i;
    for (Vertex v : drafts[i].component.vertices) ++membership[v];
    d.components.push_back(std::move(drafts[i].component));
  }
  for (Vertex v = 0; v < n; ++v)
    if (membership[v] >= 2) d.amalgamation_vertices.insert(v);
  return d;
}

std::optional<NodeId> EbcTree::a_node_of(Vertex v) const {
  auto it = std::lower_bound(a_vertex.begin(), a_vertex.end(), v);
  if (it == a_vertex.end() || *it != v) return std::nullopt;
  return c_count() + static_cast<NodeId>(it - a_vertex.begin());
}

std::size_t EbcTree::edge_count() const {
  std::size_t total = 0;
  for (const auto& adj : adjacent) total += adj.size();
  return total / 2;
}

EbcTree build_ebc_tree(const Decomposition& d) {
  EbcTree t;
  for (const Component& c : d.components) {
    t.c_vertices.push_back(c.vertices);
    t.c_kinds.push_back(c.kind);
  }
  t.a_vertex = d.amalgamation_vertices.items();
  t.adjacent.assign(t.node_count(), {});
  for (NodeId c = 0; c < t.c_count(); ++c) {
    for (Vertex v : t.c_vertices[c]) {
      if (auto a = t.a_node_of(v)) {
        t.adjacent[c].push_back(*a);
        t.adjacent[*a].push_back(c);
      }
    }
  }
  for (auto& adj : t.adjacent) std::sort(adj.begin(), adj.end());
  return t;
}

std::vector<NodeId> DebcTree::post_order() const {
  std::vector<NodeId> order;
  order.reserve(parent.size());
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < children[node].size()) {
      const NodeId child = children[node][next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

DebcTree root_tree(const EbcTree& t, NodeId root) {
  if (root >= t.node_count() || !t.is_a_node(root))
    throw GraphError("root " + std::to_string(root) + " is not an a-node");
  if (t.adjacent[root].size() < 2)
    throw GraphError("root " + std::to_string(root) + " has fewer than two neighbors");
  DebcTree dt;
  dt.tree = t;
  dt.root = root;
  dt.parent.assign(t.node_count(), std::nullopt);
  dt.children.assign(t.node_count(), {});
  std::vector<bool> seen(t.node_count(), false);
  std::vector<NodeId> queue{root};
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId w : t.adjacent[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      dt.parent[w] = u;
      dt.children[u].push_back(w);
      queue.push_back(w);
    }
  }
  return dt;
}

NodeId default_root(const EbcTree& t) {
  if (t.a_count() == 0) throw GraphError("tree has no a-node");
  NodeId best = t.c_count();
  for (NodeId a = t.c_count(); a < t.node_count(); ++a)
    if (t.adjacent[a].size() > t.adjacent[best].size()) best = a;
  return best;
}

VertexSet subtree_vertices(const DebcTree& dt, NodeId node) {
  std::vector<Vertex> vs;
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (!dt.tree.is_a_node(u)) {
      const auto& cv = dt.tree.c_vertices[u];
      vs.insert(vs.end(), cv.begin(), cv.end());
    }
    stack.insert(stack.end(), dt.children[u].begin(), dt.children[u].end());
  }
  return VertexSet(std::move(vs));
}

SubtreeGraph subtree_graph(const DebcTree& dt, const Graph& g, NodeId node) {
  SubtreeGraph out;
  out.to_original = subtree_vertices(dt, node).items();
  out.graph = induced_subgraph(g, out.to_original);
  return out;
}

}  // namespace mdim
