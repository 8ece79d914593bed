#pragma once

// Decomposition of a connected graph into extended biconnected components (EBCs),
// bridges and ordinary legs, and the tree of components and amalgamation vertices
// the dynamic program runs on.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class LegKind { hooked, ordinary };

/// Pendant path (leaf, ..., root): leaf has degree 1, inner vertices degree 2, root degree >= 3.
struct Leg {
  std::vector<Vertex> vertices;  // from leaf to root
  LegKind kind = LegKind::ordinary;

  Vertex leaf() const { return vertices.front(); }
  Vertex root() const { return vertices.back(); }
};

enum class ComponentKind { ebc, bridge, ordinary_leg };

std::string_view to_string(ComponentKind kind);

struct Component {
  ComponentKind kind = ComponentKind::ebc;
  VertexSet vertices;
  /// For an EBC the underlying biconnected component, otherwise equal to `vertices`.
  VertexSet core_vertices;
};

struct Decomposition {
  std::vector<Component> components;  // ordered by smallest member, see decompose()
  VertexSet amalgamation_vertices;
  /// Owning component of every edge, indexed by Graph edge id.
  std::vector<std::size_t> edge_owner;
};

/// Vertex sets of the biconnected components with at least three vertices.
/// Sorted by smallest member. Throws GraphError for disconnected input.
std::vector<VertexSet> biconnected_components(const Graph& g);

/// All maximal legs, ordered by leaf. Empty when no vertex has degree >= 3.
std::vector<Leg> classify_legs(const Graph& g);

/// Throws GraphError for disconnected input or n < 2.
Decomposition decompose(const Graph& g);

using NodeId = std::size_t;

/// Bipartite tree: c-nodes 0..C-1 (one per component, same order as the decomposition),
/// then a-nodes C..C+A-1 (one per amalgamation vertex, ascending).
struct EbcTree {
  std::vector<VertexSet> c_vertices;         // V(c)
  std::vector<ComponentKind> c_kinds;
  std::vector<Vertex> a_vertex;              // nu(a), indexed by node - c_count()
  std::vector<std::vector<NodeId>> adjacent; // per node, ascending

  std::size_t c_count() const { return c_vertices.size(); }
  std::size_t a_count() const { return a_vertex.size(); }
  std::size_t node_count() const { return c_count() + a_count(); }
  bool is_a_node(NodeId node) const { return node >= c_count(); }
  Vertex nu(NodeId a_node) const { return a_vertex[a_node - c_count()]; }
  std::optional<NodeId> a_node_of(Vertex v) const;
  std::size_t edge_count() const;
};

EbcTree build_ebc_tree(const Decomposition& d);

struct DebcTree {
  EbcTree tree;
  NodeId root = 0;
  std::vector<std::optional<NodeId>> parent;
  std::vector<std::vector<NodeId>> children;  // ascending node id

  /// Nodes such that every child precedes its parent.
  std::vector<NodeId> post_order() const;
};

/// Orients the tree towards `root`, which must be an a-node with at least two neighbors.
DebcTree root_tree(const EbcTree& t, NodeId root);

/// Root choice for the solver: the a-node with most neighbors, ties to the smallest nu(a).
NodeId default_root(const EbcTree& t);

struct SubtreeGraph {
  Graph graph;
  std::vector<Vertex> to_original;  // ascending; local id i is to_original[i]
};

/// G[node]: the subgraph induced by the union of V(c) over the c-nodes below `node`.
SubtreeGraph subtree_graph(const DebcTree& dt, const Graph& g, NodeId node);

/// Vertex set of G[node] without building the graph.
VertexSet subtree_vertices(const DebcTree& dt, NodeId node);

/// Graphviz text. c-nodes are boxes labelled with V(c), a-nodes circles labelled nu(a).
std::string ebc_tree_dot(const EbcTree& t);
std::string debc_tree_dot(const DebcTree& dt);

/// JSON document with components, kinds, vertex sets and amalgamation vertices.
std::string decomposition_json(const Decomposition& d, const EbcTree& t);

}  // namespace mdim
