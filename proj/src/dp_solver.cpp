#include "mdim/dp_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mdim {

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::exact: return "exact";
    case SolveMode::k_bounded: return "k_bounded";
    case SolveMode::brute_fallback: return "brute_fallback";
  }
  return "?";
}

InfeasibleBound::InfeasibleBound(std::size_t bound)
    : std::runtime_error("infeasible at bound " + std::to_string(bound)), bound_(bound) {}

namespace {

Vertex local_id(const std::vector<Vertex>& to_original, Vertex v) {
  auto it = std::lower_bound(to_original.begin(), to_original.end(), v);
  return static_cast<Vertex>(it - to_original.begin());
}

std::size_t add_sizes(std::size_t a, std::size_t b) {
  return (a == kInfeasible || b == kInfeasible) ? kInfeasible : a + b;
}

}  // namespace

CNodeProblem make_c_node_problem(const Graph& g, const DebcTree& dt, NodeId c, std::size_t budget) {
  const EbcTree& t = dt.tree;
  if (t.is_a_node(c)) throw std::invalid_argument("node " + std::to_string(c) + " is not a c-node");
  if (!dt.parent[c]) throw std::invalid_argument("c-node " + std::to_string(c) + " has no parent");
  CNodeProblem p;
  p.to_original = t.c_vertices[c].items();
  p.local = induced_subgraph(g, p.to_original);
  p.dist = DistanceMatrix(p.local);
  p.parent = local_id(p.to_original, t.nu(*dt.parent[c]));
  for (NodeId a : dt.children[c]) p.child_vertices.push_back(local_id(p.to_original, t.nu(a)));
  p.budget = budget;
  return p;
}

std::optional<HPair> compute_c_node(const CNodeProblem& p, std::span<const HPair> child_pairs) {
  if (child_pairs.size() != p.child_vertices.size())
    throw std::invalid_argument("child pairs do not match the c-node's children");
  for (const HPair& h : child_pairs) {
    // Each child must contribute a vertex besides its own amalgamation vertex; this is what
    // lets gate tests on W stand in for gate tests on the full set.
    if (h.witness_plain.size() < 2) throw std::logic_error("degenerate child pair");
  }
  const std::size_t n = p.local.vertex_count();
  const std::size_t k = p.child_vertices.size();

  std::vector<Vertex> mandatory{p.parent};
  mandatory.insert(mandatory.end(), p.child_vertices.begin(), p.child_vertices.end());
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v)
    if (std::find(mandatory.begin(), mandatory.end(), v) == mandatory.end()) pool.push_back(v);
  const std::size_t max_extra = std::min(p.budget, pool.size());

  std::size_t base = 1;
  for (const HPair& h : child_pairs) base += h.beta - 1;

  struct Best {
    std::size_t size = kInfeasible;
    std::vector<Vertex> extras;
    std::vector<bool> use_nongate;
  };
  Best best_beta, best_alpha;

  std::vector<Vertex> w(mandatory);
  std::vector<std::size_t> idx;
  std::vector<bool> use_nongate(k);
  for (std::size_t extra = 0; extra <= max_extra; ++extra) {
    const std::size_t lower = base + extra;
    if (best_beta.size <= lower && best_alpha.size <= lower) break;
    idx.resize(extra);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      w.resize(mandatory.size());
      for (std::size_t i : idx) w.push_back(pool[i]);
      if (!first_unresolved_pair(p.dist, w)) {
        std::size_t size = 1 + extra;
        for (std::size_t i = 0; i < k && size != kInfeasible; ++i) {
          // A child's vertex that is a W-gate needs the child's gate-free witness.
          use_nongate[i] = has_adjacent_out_vertex(p.local, p.dist, w, p.child_vertices[i]);
          const std::size_t child = use_nongate[i] ? child_pairs[i].alpha : child_pairs[i].beta;
          size = add_sizes(size, child == kInfeasible ? kInfeasible : child - 1);
        }
        if (size < best_beta.size) {
          best_beta = {size, {w.begin() + mandatory.size(), w.end()}, use_nongate};
        }
        if (size < best_alpha.size && !has_adjacent_out_vertex(p.local, p.dist, w, p.parent)) {
          best_alpha = {size, {w.begin() + mandatory.size(), w.end()}, use_nongate};
        }
      }
      std::size_t i = extra;
      while (i > 0 && idx[i - 1] == pool.size() - extra + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < extra; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (best_beta.size == kInfeasible) return std::nullopt;

  auto assemble = [&](const Best& b) {
    VertexSet out{p.to_original[p.parent]};
    for (Vertex v : b.extras) out.insert(p.to_original[v]);
    for (std::size_t i = 0; i < k; ++i) {
      VertexSet part = b.use_nongate[i] ? child_pairs[i].witness_nongate : child_pairs[i].witness_plain;
      part.erase(p.to_original[p.child_vertices[i]]);
      out.merge(part);
    }
    return out;
  };
  HPair h;
  h.beta = best_beta.size;
  h.witness_plain = assemble(best_beta);
  if (best_alpha.size != kInfeasible) {
    h.alpha = best_alpha.size;
    h.witness_nongate = assemble(best_alpha);
  }
  return h;
}

HPair compute_a_node(std::span<const HPair> child_pairs) {
  if (child_pairs.empty()) throw std::invalid_argument("a-node needs at least one child");
  if (child_pairs.size() == 1) return child_pairs[0];
  const std::size_t k = child_pairs.size();

  // All children gate-free: alpha = sum(alpha_i) - (k - 1). At most one child may keep a gate,
  // which gives beta; with alpha_i - beta_i in {0, 1} this is alpha or alpha - 1.
  std::size_t alpha_sum = 0;
  for (const HPair& h : child_pairs) alpha_sum = add_sizes(alpha_sum, h.alpha);

  HPair out;
  if (alpha_sum != kInfeasible) {
    out.alpha = alpha_sum - (k - 1);
    out.beta = out.alpha;
    for (const HPair& h : child_pairs) out.witness_nongate.merge(h.witness_nongate);
    out.witness_plain = out.witness_nongate;
  }
  std::optional<std::size_t> swap_child;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t total = child_pairs[j].beta;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) total = add_sizes(total, child_pairs[i].alpha);
    if (total == kInfeasible) continue;
    total -= k - 1;
    if (total < out.beta) {
      out.beta = total;
      swap_child = j;
    }
  }
  if (swap_child) {
    out.witness_plain = child_pairs[*swap_child].witness_plain;
    for (std::size_t i = 0; i < k; ++i)
      if (i != *swap_child) out.witness_plain.merge(child_pairs[i].witness_nongate);
  }
  return out;
}

bool is_path_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1 || !is_connected(g)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

DpTrace run_dp(const Graph& g, std::optional<std::size_t> bound) {
  DpTrace trace;
  trace.decomposition = decompose(g);
  EbcTree t = build_ebc_tree(trace.decomposition);
  trace.tree = root_tree(t, default_root(t));
  const DebcTree& dt = trace.tree;
  trace.pairs.assign(dt.tree.node_count(), std::nullopt);

  std::vector<HPair> child_pairs;
  for (NodeId node : dt.post_order()) {
    child_pairs.clear();
    bool feasible = true;
    for (NodeId child : dt.children[node]) {
      if (!trace.pairs[child]) {
        feasible = false;
        break;
      }
      child_pairs.push_back(*trace.pairs[child]);
    }
    if (!feasible) continue;
    if (dt.tree.is_a_node(node)) {
      HPair h = compute_a_node(child_pairs);
      if (h.beta != kInfeasible) trace.pairs[node] = std::move(h);
    } else {
      const bool ebc = dt.tree.c_kinds[node] == ComponentKind::ebc;
      const std::size_t budget = ebc ? bound.value_or(dt.tree.c_vertices[node].size()) : 2;
      auto problem = make_c_node_problem(g, dt, node, budget);
      trace.pairs[node] = compute_c_node(problem, child_pairs);
    }
  }
  return trace;
}

namespace {

void fill_counts(Solution& s, const Decomposition& d) {
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    if (c.kind != ComponentKind::ebc) continue;
    std::size_t count = 0;
    for (Vertex v : s.resolving_set) count += c.vertices.contains(v) ? 1 : 0;
    s.per_ebc_counts[i] = count;
  }
}

Solution brute_solution(const Graph& g, std::optional<std::size_t> max_size, std::size_t limit) {
  const DistanceMatrix dm = all_pairs_distances(g);
  ResolveConstraints c;
  c.max_size = max_size;
  auto set = brute_force_min_resolving(g, dm, c, limit);
  if (!set) throw InfeasibleBound(max_size.value_or(0));
  Solution s;
  s.dimension = set->size();
  s.resolving_set = std::move(*set);
  s.mode = SolveMode::brute_fallback;
  return s;
}

}  // namespace

Solution solve(const Graph& g, const SolveOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw GraphError("graph has no vertices");
  if (!is_connected(g)) throw GraphError("graph is not connected");
  if (options.bound && *options.bound == 0) throw std::invalid_argument("bound must be positive");

  if (options.force_brute) {
    if (options.bound) throw std::invalid_argument("the oracle does not take a per-EBC bound");
    Solution s = brute_solution(g, std::nullopt, options.brute_limit);
    if (n >= 2) fill_counts(s, decompose(g));
    return s;
  }

  Solution s;
  s.bound_used = options.bound;
  s.mode = options.bound ? SolveMode::k_bounded : SolveMode::exact;
  if (n == 1) return s;
  if (is_path_graph(g)) {
    // Either end vertex resolves a path. The tree DP needs every hanging subtree to hold a
    // vertex besides its attachment point, which long paths do not offer.
    s.dimension = 1;
    s.resolving_set = VertexSet{g.degree(0) <= 1 ? Vertex{0} : [&] {
      Vertex v = 0;
      while (g.degree(v) != 1) ++v;
      return v;
    }()};
    return s;
  }

  const Decomposition d = decompose(g);
  if (d.amalgamation_vertices.empty()) {
    // A single EBC holds every vertex, so the bound caps the whole set.
    Solution b = brute_solution(g, options.bound, options.brute_limit);
    b.bound_used = options.bound;
    fill_counts(b, d);
    return b;
  }

  DpTrace trace = run_dp(g, options.bound);
  const auto& root = trace.pairs[trace.tree.root];
  if (!root) throw InfeasibleBound(options.bound.value_or(0));
  s.resolving_set = root->witness_plain;
  s.resolving_set.erase(trace.tree.tree.nu(trace.tree.root));
  s.dimension = s.resolving_set.size();

  if (!is_resolving_set(g, s.resolving_set)) {
    if (options.bound || n > options.brute_limit)
      throw std::logic_error("tree DP produced a non-resolving set " + to_string(s.resolving_set));
    Solution b = brute_solution(g, std::nullopt, options.brute_limit);
    fill_counts(b, d);
    return b;
  }
  fill_counts(s, d);
  return s;
}

BoundSearch smallest_bound(const Graph& g, std::size_t brute_limit) {
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
    try {
      SolveOptions options;
      options.bound = k;
      options.brute_limit = brute_limit;
      return {k, solve(g, options)};
    } catch (const InfeasibleBound&) {
    }
  }
  throw std::logic_error("no feasible bound up to n");
}

}  // namespace mdim
