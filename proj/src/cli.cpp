#include "mdim/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdim/decomposition.hpp"
#include "mdim/dp_solver.hpp"
#include "mdim/gadgets.hpp"
#include "mdim/generators.hpp"
#include "mdim/io.hpp"
#include "mdim/resolving.hpp"

namespace mdim::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_edge_list(read_input(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParseError("cannot write '" + path + "'");
  os << text;
}

VertexSet parse_set(const std::string& text) {
  std::vector<Vertex> items;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok[0] == '-') throw ParseError("--set: bad vertex '" + tok + "'");
    items.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(items));
}

nlohmann::ordered_json solution_json(const std::string& command, const Graph& g, const Solution& s,
                                     double ms) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (auto [component, count] : s.per_ebc_counts)
    counts.push_back({{"component", component}, {"count", count}});
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  doc["dimension"] = s.dimension;
  doc["resolving_set"] = s.resolving_set.items();
  doc["mode"] = std::string(to_string(s.mode));
  doc["bound"] = s.bound_used ? nlohmann::ordered_json(*s.bound_used) : nlohmann::ordered_json(nullptr);
  doc["per_ebc_counts"] = std::move(counts);
  doc["duration_ms"] = ms;
  return doc;
}

void print_solution(std::ostream& out, const Graph& g, const Solution& s) {
  out << "n " << g.vertex_count() << ", m " << g.edge_count() << '\n'
      << "dimension " << s.dimension << '\n'
      << "resolving set " << to_string(s.resolving_set) << '\n'
      << "mode " << to_string(s.mode);
  if (s.bound_used) out << " (k = " << *s.bound_used << ')';
  out << '\n';
  for (auto [component, count] : s.per_ebc_counts)
    out << "  ebc " << component << ": " << count << '\n';
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric dimension via extended biconnected components", "mdim"};
  app.require_subcommand(1);

  std::string graph_path, format = "dot", set_text, cnf_path, out_path, labels_path;
  std::optional<std::size_t> bound;
  bool brute = false, json = false, rooted = false;
  std::size_t gen_n = 0, gen_m = 0;
  std::uint64_t seed = 0;

  auto* decompose_cmd = app.add_subcommand("decompose", "Print the component tree as DOT or JSON");
  decompose_cmd->add_option("graph", graph_path, "Edge-list file, - for stdin")->required();
  decompose_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  decompose_cmd->add_flag("--rooted", rooted, "Orient the tree towards the solver's root");

  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum resolving set");
  solve_cmd->add_option("graph", graph_path, "Edge-list file, - for stdin")->required();
  solve_cmd->add_option("--k", bound, "At most k resolving vertices per EBC")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--brute", brute, "Exhaustive search instead of the tree DP");
  solve_cmd->add_flag("--json", json, "Machine-readable report");

  auto* check_cmd = app.add_subcommand("check", "Test whether a vertex set resolves the graph");
  check_cmd->add_option("graph", graph_path, "Edge-list file, - for stdin")->required();
  check_cmd->add_option("--set", set_text, "Comma-separated vertex ids")->required();

  auto* bound_cmd = app.add_subcommand("bound", "Smallest k with a k-EBC-bounded resolving set");
  bound_cmd->add_option("graph", graph_path, "Edge-list file, - for stdin")->required();
  bound_cmd->add_flag("--json", json, "Machine-readable report");

  auto* gadget_cmd = app.add_subcommand("gen-gadget", "Reduce a 3-CNF formula to a graph");
  gadget_cmd->add_option("cnf", cnf_path, "DIMACS CNF file, - for stdin")->required();
  gadget_cmd->add_option("-o,--output", out_path, "Edge-list destination (default stdout)");
  gadget_cmd->add_option("--labels", labels_path, "Write the vertex label map as JSON");

  auto* random_cmd = app.add_subcommand("gen-random", "Reproducible random connected graph");
  random_cmd->add_option("--n", gen_n, "Vertex count")->required();
  random_cmd->add_option("--m", gen_m, "Edge count")->required();
  random_cmd->add_option("--seed", seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string command;
  for (const auto& a : args) command += (command.empty() ? "" : " ") + a;

  try {
    const auto start = Clock::now();
    const std::size_t limit = brute_limit_from_env();
    if (*decompose_cmd) {
      const Graph g = load_graph(graph_path);
      const Decomposition d = decompose(g);
      const EbcTree t = build_ebc_tree(d);
      if (format == "json") {
        out << decomposition_json(d, t) << '\n';
      } else if (rooted) {
        if (t.a_count() == 0) throw GraphError("graph has no amalgamation vertex to root at");
        out << debc_tree_dot(root_tree(t, default_root(t)));
      } else {
        out << ebc_tree_dot(t);
      }
    } else if (*solve_cmd) {
      const Graph g = load_graph(graph_path);
      SolveOptions options;
      options.bound = bound;
      options.force_brute = brute;
      options.brute_limit = limit;
      const Solution s = solve(g, options);
      if (json)
        out << solution_json(command, g, s, elapsed_ms(start)).dump() << '\n';
      else
        print_solution(out, g, s);
    } else if (*check_cmd) {
      const Graph g = load_graph(graph_path);
      const VertexSet r = parse_set(set_text);
      const ResolveVerdict verdict = is_resolving_set(g, r);
      if (!verdict) {
        out << "not resolving; unresolved pair (" << verdict.unresolved->first << ','
            << verdict.unresolved->second << ")\n";
      } else {
        out << "resolving\n";
        const DistanceMatrix dm = all_pairs_distances(g);
        for (Vertex v : r) {
          if (auto w = is_gate(g, dm, r, v)) {
            out << "  " << v << " is a gate; out-vertices";
            for (Vertex u : w->out_vertices) out << ' ' << u;
            out << '\n';
          }
        }
      }
    } else if (*bound_cmd) {
      const Graph g = load_graph(graph_path);
      const BoundSearch b = smallest_bound(g, limit);
      if (json) {
        auto doc = solution_json(command, g, b.solution, elapsed_ms(start));
        doc["smallest_bound"] = b.k;
        out << doc.dump() << '\n';
      } else {
        out << "smallest bound " << b.k << '\n';
        print_solution(out, g, b.solution);
      }
    } else if (*gadget_cmd) {
      const Formula f = parse_dimacs_cnf(read_input(cnf_path));
      const GadgetGraph gg = reduce_to_graph(f);
      const std::string edges = write_edge_list(gg.graph);
      if (out_path.empty())
        out << edges;
      else
        write_file(out_path, edges);
      if (!labels_path.empty()) write_file(labels_path, labels_json(gg) + "\n");
    } else if (*random_cmd) {
      out << write_edge_list(random_connected_graph(gen_n, gen_m, seed));
    }
    return kExitOk;
  } catch (const InfeasibleBound& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace mdim::cli
