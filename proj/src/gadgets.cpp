#include "mdim/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mdim {

namespace {

// Local ids inside one variable gadget.
enum VarNode : Vertex { T = 0, F, A1, A2, A3, A4, B1, B2, B3, B4 };

// A hexagon T-a1-b1-F-b2-a2 with one pendant on each of a1, a2, b1, b2. The pendants
// make the pairs (a3, a4) and (b3, b4) invisible from outside, which forces one interior
// landmark per variable, and any landmark on the hexagon can move to its pendant.
constexpr std::array<std::pair<VarNode, VarNode>, 10> kVariableEdges{{
    {T, A1}, {A1, B1}, {B1, F}, {F, B2}, {B2, A2}, {A2, T},
    {A1, A3}, {A2, A4}, {B1, B3}, {B2, B4},
}};
constexpr std::array<const char*, 10> kVariableNames{"T", "F", "a", "a", "a", "a", "b", "b", "b", "b"};
constexpr std::array<int, 10> kVariableIndex{0, 0, 1, 2, 3, 4, 1, 2, 3, 4};

// Clause gadget: c2 is the hub, c4 and c5 are twin leaves.
constexpr std::array<std::pair<int, int>, 4> kClauseEdges{{{1, 2}, {2, 3}, {2, 4}, {2, 5}}};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long parse_int(const std::string& token, std::size_t line) {
  long long value = 0;
  auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || p != token.data() + token.size())
    throw FormulaError("line " + std::to_string(line) + ": bad integer '" + token + "'");
  return value;
}

}  // namespace

Formula parse_dimacs_cnf(std::string_view text) {
  Formula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream tokens(line);
    if (line[0] == 'p') {
      std::string p, fmt, vars, clauses, extra;
      tokens >> p >> fmt >> vars >> clauses;
      if (header || p != "p" || fmt != "cnf" || clauses.empty() || (tokens >> extra))
        throw FormulaError("line " + std::to_string(line_no) + ": malformed header '" + line + "'");
      const long long nv = parse_int(vars, line_no), nc = parse_int(clauses, line_no);
      if (nv < 0 || nc < 0) throw FormulaError("line " + std::to_string(line_no) + ": negative count");
      f.num_vars = static_cast<std::size_t>(nv);
      declared = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) throw FormulaError("line " + std::to_string(line_no) + ": clause before header");
    std::string tok;
    while (tokens >> tok) {
      const long long lit = parse_int(tok, line_no);
      if (pending.empty()) pending_line = line_no;
      if (lit == 0) {
        if (pending.size() != 3)
          throw FormulaError("line " + std::to_string(pending_line) + ": clause has " +
                             std::to_string(pending.size()) + " literals, expected 3");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
      if (var > f.num_vars)
        throw FormulaError("line " + std::to_string(line_no) + ": variable " + tok + " out of range");
      for (const Literal& l : pending)
        if (l.variable == var)
          throw FormulaError("line " + std::to_string(line_no) + ": repeated variable " +
                             std::to_string(var) + " in a clause");
      pending.push_back({var, lit > 0});
    }
  }
  if (!header) throw FormulaError("missing 'p cnf' header");
  if (!pending.empty())
    throw FormulaError("line " + std::to_string(pending_line) + ": clause not terminated by 0");
  if (f.clauses.size() != declared)
    throw FormulaError("header declares " + std::to_string(declared) + " clauses, found " +
                       std::to_string(f.clauses.size()));
  return f;
}

bool is_satisfiable(const Formula& f) {
  if (f.num_vars >= 63) throw FormulaError("too many variables for exhaustive check");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
        return ((mask >> (l.variable - 1)) & 1u) == (l.positive ? 1u : 0u);
      });
    });
    if (ok) return true;
  }
  return false;
}

Vertex GadgetGraph::at(const std::string& label) const {
  auto it = labels.find(label);
  if (it == labels.end()) throw std::out_of_range("no vertex labelled " + label);
  return it->second;
}

std::vector<Vertex> variable_interior(std::size_t variable) {
  const auto base = static_cast<Vertex>((variable - 1) * kVariableGadgetSize);
  std::vector<Vertex> out;
  for (Vertex v = A1; v <= B4; ++v) out.push_back(base + v);
  return out;
}

Vertex clause_vertex(std::size_t num_vars, std::size_t clause, std::size_t q) {
  return static_cast<Vertex>(num_vars * kVariableGadgetSize + (clause - 1) * kClauseGadgetSize + q - 1);
}

GadgetGraph reduce_to_graph(const Formula& f) {
  if (f.num_vars == 0) throw FormulaError("formula has no variables");
  if (f.clauses.empty()) throw FormulaError("formula has no clauses");
  const std::size_t n = f.num_vars * kVariableGadgetSize + f.clauses.size() * kClauseGadgetSize;

  GadgetGraph gg;
  std::vector<Edge> edges;
  auto var_vertex = [](std::size_t i, VarNode node) {
    return static_cast<Vertex>((i - 1) * kVariableGadgetSize + node);
  };
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    for (Vertex v = 0; v < kVariableGadgetSize; ++v) {
      std::string label = kVariableNames[v];
      label += kVariableIndex[v] == 0 ? std::to_string(i)
                                      : std::to_string(i) + "^" + std::to_string(kVariableIndex[v]);
      gg.labels.emplace(std::move(label), var_vertex(i, static_cast<VarNode>(v)));
    }
    for (auto [u, v] : kVariableEdges) edges.emplace_back(var_vertex(i, u), var_vertex(i, v));
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    for (std::size_t q = 1; q <= kClauseGadgetSize; ++q)
      gg.labels.emplace("c" + std::to_string(j) + "^" + std::to_string(q), clause_vertex(f.num_vars, j, q));
    for (auto [p, q] : kClauseEdges)
      edges.emplace_back(clause_vertex(f.num_vars, j, p), clause_vertex(f.num_vars, j, q));

    const Clause& c = f.clauses[j - 1];
    const Vertex c1 = clause_vertex(f.num_vars, j, 1), c3 = clause_vertex(f.num_vars, j, 3);
    for (std::size_t i = 1; i <= f.num_vars; ++i) {
      const Vertex t = var_vertex(i, T), fv = var_vertex(i, F);
      edges.emplace_back(t, c1);
      edges.emplace_back(fv, c1);
      auto lit = std::find_if(c.begin(), c.end(), [&](const Literal& l) { return l.variable == i; });
      if (lit == c.end() || !lit->positive) edges.emplace_back(t, c3);
      if (lit == c.end() || lit->positive) edges.emplace_back(fv, c3);
    }
  }
  gg.graph = build_graph(n, edges);
  return gg;
}

std::string labels_json(const GadgetGraph& gg) {
  std::vector<std::pair<Vertex, std::string>> by_id;
  for (const auto& [label, v] : gg.labels) by_id.emplace_back(v, label);
  std::sort(by_id.begin(), by_id.end());
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [v, label] : by_id) doc[label] = v;
  return doc.dump(2);
}

}  // namespace mdim
