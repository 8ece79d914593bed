#include <map>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "mdim/decomposition.hpp"
#include "mdim/generators.hpp"
#include "support.hpp"

using namespace mdim;

namespace {

// Number of connected components of g minus one vertex.
std::size_t components_without(const Graph& g, Vertex removed) {
  std::vector<bool> seen(g.vertex_count(), false);
  seen[removed] = true;
  std::size_t count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count;
}

Graph triangle_with_tail() { return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("biconnected_components") {
  CHECK(biconnected_components(cycle_graph(3)) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(biconnected_components(bowtie_graph()) == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
  CHECK(biconnected_components(path_graph(3)).empty());
  CHECK_THROWS_AS(biconnected_components(build_graph(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("classify_legs") {
  const auto hooked = classify_legs(triangle_with_tail());
  REQUIRE(hooked.size() == 1);
  CHECK(hooked[0].vertices == std::vector<Vertex>{4, 3, 2});
  CHECK(hooked[0].kind == LegKind::hooked);

  const auto star = classify_legs(star_graph(3));
  REQUIRE(star.size() == 3);
  for (const Leg& leg : star) {
    CHECK(leg.root() == 0);
    CHECK(leg.kind == LegKind::ordinary);
  }
  CHECK(classify_legs(path_graph(3)).empty());
}

TEST_CASE("legs match the removal definition") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = support::random_graph(seed, 4, 12, 1);
    for (const Leg& leg : classify_legs(g)) {
      CHECK(g.degree(leg.leaf()) == 1);
      CHECK(g.degree(leg.root()) >= 3);
      for (std::size_t i = 1; i + 1 < leg.vertices.size(); ++i) CHECK(g.degree(leg.vertices[i]) == 2);
      CHECK((leg.kind == LegKind::hooked) == (components_without(g, leg.root()) == 2));
    }
  }
}

TEST_CASE("decompose: reference graphs") {
  const Decomposition bowtie = decompose(bowtie_graph());
  REQUIRE(bowtie.components.size() == 2);
  for (const auto& c : bowtie.components) CHECK(c.kind == ComponentKind::ebc);
  CHECK(bowtie.amalgamation_vertices == VertexSet{2});

  const Decomposition tbt = decompose(triangle_bridge_triangle_graph());
  REQUIRE(tbt.components.size() == 3);
  CHECK(tbt.components[0].kind == ComponentKind::ebc);
  CHECK(tbt.components[0].vertices == VertexSet{0, 1, 2});
  CHECK(tbt.components[1].kind == ComponentKind::bridge);
  CHECK(tbt.components[1].vertices == VertexSet{2, 3});
  CHECK(tbt.components[2].kind == ComponentKind::ebc);
  CHECK(tbt.amalgamation_vertices == VertexSet{2, 3});

  const Decomposition tail = decompose(triangle_with_tail());
  REQUIRE(tail.components.size() == 1);
  CHECK(tail.components[0].kind == ComponentKind::ebc);
  CHECK(tail.components[0].vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK(tail.components[0].core_vertices == VertexSet{0, 1, 2});
  CHECK(tail.amalgamation_vertices.empty());

  const Decomposition star = decompose(star_graph(3));
  REQUIRE(star.components.size() == 3);
  for (const auto& c : star.components) CHECK(c.kind == ComponentKind::ordinary_leg);

  // A path has no legs and splits into bridges.
  const Decomposition path = decompose(path_graph(4));
  CHECK(path.components.size() == 3);
  for (const auto& c : path.components) CHECK(c.kind == ComponentKind::bridge);
  CHECK(path.amalgamation_vertices == VertexSet{1, 2});

  CHECK_THROWS_AS(decompose(build_graph(1, {})), GraphError);
  CHECK_THROWS_AS(decompose(build_graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("decompose: partition properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = support::random_graph(seed, 2, 12, seed % 3);
    const Decomposition d = decompose(g);
    CAPTURE(seed);

    REQUIRE(d.edge_owner.size() == g.edge_count());
    std::vector<std::size_t> owned(d.components.size(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges()[e];
      const Component& c = d.components[d.edge_owner[e]];
      CHECK(c.vertices.contains(u));
      CHECK(c.vertices.contains(v));
      ++owned[d.edge_owner[e]];
    }
    // Each component owns exactly the edges it induces, so the edge sets are disjoint.
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      const Component& c = d.components[i];
      std::size_t induced = 0;
      for (auto [u, v] : g.edges()) induced += c.vertices.contains(u) && c.vertices.contains(v);
      CHECK(owned[i] == induced);
      if (c.kind == ComponentKind::bridge) CHECK(c.vertices.size() == 2);
      if (c.kind != ComponentKind::ebc) CHECK(c.core_vertices == c.vertices);
    }

    std::map<Vertex, std::size_t> membership;
    VertexSet all;
    for (const auto& c : d.components)
      for (Vertex v : c.vertices) ++membership[v], all.insert(v);
    CHECK(all.size() == g.vertex_count());
    VertexSet multi;
    for (auto [v, count] : membership)
      if (count >= 2) multi.insert(v);
    CHECK(multi == d.amalgamation_vertices);

    // Roots of hooked legs are absorbed and never become amalgamation vertices.
    for (const Leg& leg : classify_legs(g))
      if (leg.kind == LegKind::hooked) CHECK_FALSE(d.amalgamation_vertices.contains(leg.root()));

    const Decomposition again = decompose(g);
    CHECK(again.edge_owner == d.edge_owner);
  }
}

TEST_CASE("EBC-tree shape") {
  const EbcTree bowtie = build_ebc_tree(decompose(bowtie_graph()));
  CHECK(bowtie.c_count() == 2);
  CHECK(bowtie.a_count() == 1);
  CHECK(bowtie.edge_count() == 2);

  const EbcTree star = build_ebc_tree(decompose(star_graph(3)));
  CHECK(star.c_count() == 3);
  CHECK(star.a_count() == 1);
  CHECK(star.edge_count() == 3);

  const EbcTree tbt = build_ebc_tree(decompose(triangle_bridge_triangle_graph()));
  CHECK(tbt.node_count() == 5);
  CHECK(tbt.edge_count() == 4);
  CHECK(tbt.a_node_of(2).has_value());
  CHECK_FALSE(tbt.a_node_of(0).has_value());

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = support::random_graph(seed, 3, 12, seed % 3);
    const EbcTree t = build_ebc_tree(decompose(g));
    CAPTURE(seed);
    // Connected with node_count - 1 edges is a tree.
    CHECK(t.edge_count() + 1 == t.node_count());
    std::vector<bool> seen(t.node_count(), false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : t.adjacent[u]) {
        CHECK(t.is_a_node(u) != t.is_a_node(w));
        if (!seen[w]) seen[w] = true, stack.push_back(w);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    for (NodeId u = 0; u < t.node_count(); ++u) {
      if (t.is_a_node(u)) CHECK(t.adjacent[u].size() >= 2);
      for (NodeId w : t.adjacent[u])
        if (!t.is_a_node(u)) CHECK(t.c_vertices[u].contains(t.nu(w)));
    }
  }
}

TEST_CASE("rooting and subtree graphs") {
  const EbcTree bt = build_ebc_tree(decompose(bowtie_graph()));
  const DebcTree rb = root_tree(bt, 2);
  CHECK(rb.children[2] == std::vector<NodeId>{0, 1});
  CHECK_FALSE(rb.parent[2].has_value());

  const EbcTree tbt = build_ebc_tree(decompose(triangle_bridge_triangle_graph()));
  const NodeId a2 = *tbt.a_node_of(2), a3 = *tbt.a_node_of(3);
  const DebcTree dt = root_tree(tbt, a2);
  CHECK(dt.children[a2] == std::vector<NodeId>{0, 1});
  CHECK(dt.children[1] == std::vector<NodeId>{a3});
  CHECK(dt.children[a3] == std::vector<NodeId>{2});
  CHECK(subtree_vertices(dt, 1) == VertexSet{2, 3, 4, 5});
  const SubtreeGraph sg = subtree_graph(dt, triangle_bridge_triangle_graph(), 1);
  CHECK(sg.to_original == std::vector<Vertex>{2, 3, 4, 5});
  CHECK(sg.graph.edge_count() == 4);
  CHECK(subtree_graph(dt, triangle_bridge_triangle_graph(), a2).graph.edges() ==
        triangle_bridge_triangle_graph().edges());

  const EbcTree star = build_ebc_tree(decompose(star_graph(3)));
  const DebcTree ds = root_tree(star, default_root(star));
  CHECK(ds.children[ds.root].size() == 3);
  CHECK(subtree_graph(ds, star_graph(3), 0).graph.edge_count() == 1);

  CHECK_THROWS_AS(root_tree(tbt, 0), GraphError);

  const auto order = dt.post_order();
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (NodeId u = 0; u < dt.tree.node_count(); ++u)
    if (dt.parent[u]) CHECK(pos[u] < pos[*dt.parent[u]]);
}

TEST_CASE("default root has the most neighbours, ties to the smallest vertex") {
  const EbcTree t = build_ebc_tree(decompose(triangle_bridge_triangle_graph()));
  CHECK(t.nu(default_root(t)) == 2);
  // Star-with-triangle: vertex 0 carries three legs.
  const Graph g = build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {4, 6}});
  const EbcTree u = build_ebc_tree(decompose(g));
  CHECK(u.nu(default_root(u)) == 0);
}

TEST_CASE("exports") {
  const Graph g = triangle_bridge_triangle_graph();
  const Decomposition d = decompose(g);
  const EbcTree t = build_ebc_tree(d);
  const std::string dot = ebc_tree_dot(t);
  CHECK(dot.find("graph ebc_tree") == 0);
  CHECK(dot.find("shape=box, label=\"bridge {2,3}\"") != std::string::npos);
  CHECK(dot.find("shape=circle, label=\"3\"") != std::string::npos);
  const std::string rooted = debc_tree_dot(root_tree(t, default_root(t)));
  CHECK(rooted.find("peripheries=2") != std::string::npos);
  CHECK(rooted.find("->") != std::string::npos);

  const auto doc = nlohmann::json::parse(decomposition_json(d, t));
  CHECK(doc["components"].size() == 3);
  CHECK(doc["components"][1]["kind"] == "bridge");
  CHECK(doc["amalgamation_vertices"] == nlohmann::json::array({2, 3}));
  CHECK(doc["tree_edges"].size() == 4);
}
