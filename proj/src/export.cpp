#include <sstream>

#include "json.hpp"
#include "mdim/decomposition.hpp"

namespace mdim {

namespace {

void write_nodes(std::ostream& os, const EbcTree& t) {
  for (NodeId c = 0; c < t.c_count(); ++c) {
    os << "  n" << c << " [shape=box, label=\"" << to_string(t.c_kinds[c]) << ' '
       << to_string(t.c_vertices[c]) << "\"];\n";
  }
  for (NodeId a = t.c_count(); a < t.node_count(); ++a)
    os << "  n" << a << " [shape=circle, label=\"" << t.nu(a) << "\"];\n";
}

}  // namespace

std::string ebc_tree_dot(const EbcTree& t) {
  std::ostringstream os;
  os << "graph ebc_tree {\n";
  write_nodes(os, t);
  for (NodeId c = 0; c < t.c_count(); ++c)
    for (NodeId a : t.adjacent[c]) os << "  n" << c << " -- n" << a << ";\n";
  os << "}\n";
  return os.str();
}

std::string debc_tree_dot(const DebcTree& dt) {
  std::ostringstream os;
  os << "digraph debc_tree {\n";
  write_nodes(os, dt.tree);
  os << "  n" << dt.root << " [peripheries=2];\n";
  for (NodeId u = 0; u < dt.tree.node_count(); ++u)
    if (dt.parent[u]) os << "  n" << u << " -> n" << *dt.parent[u] << ";\n";
  os << "}\n";
  return os.str();
}

std::string decomposition_json(const Decomposition& d, const EbcTree& t) {
  using nlohmann::json;
  json doc;
  json comps = json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    comps.push_back({{"index", i},
                     {"kind", std::string(to_string(c.kind))},
                     {"vertices", c.vertices.items()},
                     {"core_vertices", c.core_vertices.items()}});
  }
  doc["components"] = std::move(comps);
  doc["amalgamation_vertices"] = d.amalgamation_vertices.items();
  json edges = json::array();
  for (NodeId c = 0; c < t.c_count(); ++c)
    for (NodeId a : t.adjacent[c]) edges.push_back({{"component", c}, {"vertex", t.nu(a)}});
  doc["tree_edges"] = std::move(edges);
  return doc.dump(2);
}

}  // namespace mdim
