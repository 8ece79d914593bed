#include <cstdlib>
#include <set>

#include "doctest.h"
#include "mdim/decomposition.hpp"
#include "mdim/dp_solver.hpp"
#include "mdim/generators.hpp"
#include "mdim/resolving.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace mdim;

TEST_CASE("is_resolving_set: reference cases") {
  const Graph c6 = cycle_graph(6);
  const DistanceMatrix dm = all_pairs_distances(c6);
  CHECK(is_resolving_set(c6, dm, {0, 1}).resolving);
  const auto bad = is_resolving_set(c6, dm, {0, 3});
  CHECK_FALSE(bad.resolving);
  CHECK(bad.unresolved == Edge{1, 5});

  const Graph k1 = build_graph(1, {});
  CHECK(is_resolving_set(k1, all_pairs_distances(k1), {}).resolving);
  CHECK(is_resolving_set(k1, VertexSet{}).resolving);
  CHECK_THROWS_AS(is_resolving_set(c6, dm, {0, 6}), GraphError);
  CHECK_THROWS_AS(is_resolving_set(c6, VertexSet{9}), GraphError);
}

TEST_CASE("both resolving routes agree with the oracle, pair included") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = support::random_graph(seed, 2, 10);
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    const std::size_t n = g.vertex_count();
    SeededRng rng(seed);
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint64_t mask = rng.below(std::uint64_t{1} << n);
      std::vector<Vertex> items;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) items.push_back(v);
      const VertexSet r(items);
      const auto a = is_resolving_set(g, dm, r);
      const auto b = is_resolving_set(g, r);
      CHECK(a.resolving == oracle::resolves(fw, mask));
      CHECK(a.resolving == b.resolving);
      CHECK(a.unresolved == b.unresolved);
      if (a.unresolved) {
        // Smallest unresolved pair, found by the plain double loop.
        std::optional<Edge> expected;
        for (Vertex u = 0; u < n && !expected; ++u)
          for (Vertex v = u + 1; v < n && !expected; ++v)
            if (std::all_of(items.begin(), items.end(), [&](Vertex w) { return fw[u][w] == fw[v][w]; }))
              expected = Edge{u, v};
        CHECK(a.unresolved == expected);
      }
    }
  }
}

TEST_CASE("is_gate: reference cases") {
  const Graph p3 = path_graph(3);
  const DistanceMatrix dp = all_pairs_distances(p3);
  const auto w = is_gate(p3, dp, {0}, 1);
  REQUIRE(w.has_value());
  CHECK(w->out_vertices == std::vector<Vertex>{2});
  CHECK_FALSE(is_gate(p3, dp, {0}, 2).has_value());

  const Graph c6 = cycle_graph(6);
  const auto c = is_gate(c6, all_pairs_distances(c6), {0, 1}, 0);
  REQUIRE(c.has_value());
  CHECK(c->gate == 0);
  CHECK(c->out_vertices == std::vector<Vertex>{5, 4});
}

TEST_CASE("is_gate agrees with the all-vertex definition and lists every out-vertex") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = support::random_graph(seed, 2, 10);
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    const std::size_t n = g.vertex_count();
    SeededRng rng(seed + 1000);
    for (int trial = 0; trial < 6; ++trial) {
      const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << n) - 1);
      const VertexSet a = [&] {
        std::vector<Vertex> items;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1u) items.push_back(v);
        return VertexSet(items);
      }();
      for (Vertex v = 0; v < n; ++v) {
        const auto w = is_gate(g, dm, a, v);
        REQUIRE(w.has_value() == oracle::gate(fw, mask, v));
        if (!w) continue;
        std::size_t expected = 0;
        for (Vertex u = 0; u < n; ++u) {
          if (u == v) continue;
          bool all = true;
          for (Vertex x : a) all = all && fw[u][x] == fw[u][v] + fw[v][x];
          expected += all;
        }
        CHECK(w->out_vertices.size() == expected);
        for (std::size_t i = 1; i < w->out_vertices.size(); ++i)
          CHECK(dm.at(v, w->out_vertices[i - 1]) <= dm.at(v, w->out_vertices[i]));

        // With a resolving set, out-vertices sit at pairwise distinct distances from the gate.
        if (oracle::resolves(fw, mask)) {
          std::set<Distance> seen;
          for (Vertex u : w->out_vertices) CHECK(seen.insert(dm.at(v, u)).second);
        }
      }
    }
  }
}

TEST_CASE("brute_force_min_resolving: reference cases") {
  const Graph c6 = cycle_graph(6);
  CHECK(brute_force_min_resolving(c6, all_pairs_distances(c6)) == VertexSet{0, 1});

  const Graph tri = cycle_graph(3);
  ResolveConstraints with0;
  with0.must_include = {0};
  CHECK(brute_force_min_resolving(tri, all_pairs_distances(tri), with0) == VertexSet{0, 1});

  const Graph p3 = path_graph(3);
  ResolveConstraints nongate;
  nongate.must_include = {1};
  nongate.non_gate_at = 1;
  // 1 is a gate of both {0,1} and {1,2} (out-vertex 2, resp. 0), so all three are needed.
  CHECK(is_gate(p3, all_pairs_distances(p3), {0, 1}, 1).has_value());
  CHECK(is_gate(p3, all_pairs_distances(p3), {1, 2}, 1).has_value());
  CHECK(brute_force_min_resolving(p3, all_pairs_distances(p3), nongate) == VertexSet{0, 1, 2});
  CHECK(oracle::min_resolving(oracle::floyd_warshall(p3), 0b010, 1) == 3);

  ResolveConstraints capped;
  capped.max_size = 1;
  CHECK_FALSE(brute_force_min_resolving(c6, all_pairs_distances(c6), capped).has_value());

  ResolveConstraints invalid;
  invalid.must_include = {0};
  invalid.non_gate_at = 2;
  CHECK_THROWS_AS(brute_force_min_resolving(p3, all_pairs_distances(p3), invalid), GraphError);
}

TEST_CASE("brute force refuses large graphs unless the limit is raised") {
  const Graph g = cycle_graph(26);
  const DistanceMatrix dm = all_pairs_distances(g);
  CHECK_THROWS_AS(brute_force_min_resolving(g, dm), OracleLimitError);
  CHECK(brute_force_min_resolving(g, dm, {}, 26)->size() == 2);

  ::setenv("MDIM_BRUTE_LIMIT", "40", 1);
  CHECK(brute_limit_from_env() == 40);
  ::setenv("MDIM_BRUTE_LIMIT", "junk", 1);
  CHECK(brute_limit_from_env() == kDefaultBruteLimit);
  ::unsetenv("MDIM_BRUTE_LIMIT");
  CHECK(brute_limit_from_env() == kDefaultBruteLimit);
}

TEST_CASE("brute force matches the bitmask oracle, constraints included") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = support::random_graph(seed, 2, 9);
    const DistanceMatrix dm = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    const auto plain = brute_force_min_resolving(g, dm);
    REQUIRE(plain.has_value());
    CHECK(plain->size() == oracle::min_resolving(fw));
    CHECK(is_resolving_set(g, dm, *plain).resolving);

    const Vertex v = static_cast<Vertex>(seed % g.vertex_count());
    ResolveConstraints c;
    c.must_include = {v};
    c.non_gate_at = v;
    const auto ng = brute_force_min_resolving(g, dm, c);
    REQUIRE(ng.has_value() == (oracle::min_resolving(fw, 1ull << v, v) <= g.vertex_count()));
    if (ng) {
      CHECK(ng->size() == oracle::min_resolving(fw, 1ull << v, v));
      CHECK_FALSE(is_gate(g, dm, *ng, v).has_value());
    }
  }
}

TEST_CASE("bounds between plain, v- and non-gate-v-resolving minima") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = support::random_graph(seed, 2, 8);
    const DistanceMatrix dm = all_pairs_distances(g);
    const std::size_t r1 = brute_force_min_resolving(g, dm)->size();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ResolveConstraints c;
      c.must_include = {v};
      const std::size_t r2 = brute_force_min_resolving(g, dm, c)->size();
      c.non_gate_at = v;
      const std::size_t r3 = brute_force_min_resolving(g, dm, c)->size();
      CHECK(r1 <= r2);
      CHECK(r2 <= r1 + 1);
      CHECK(r2 <= r3);
      CHECK(r3 <= r2 + 1);
    }
  }
}

TEST_CASE("supersets of resolving sets resolve") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = support::random_graph(seed, 3, 12);
    const DistanceMatrix dm = all_pairs_distances(g);
    VertexSet r = solve(g).resolving_set;
    SeededRng rng(seed);
    for (int step = 0; step < 4; ++step) {
      r.insert(static_cast<Vertex>(rng.below(g.vertex_count())));
      CHECK(is_resolving_set(g, dm, r).resolving);
    }
  }
}

TEST_CASE("known families by exhaustive search") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const Graph p = path_graph(n);
    CHECK(brute_force_min_resolving(p, all_pairs_distances(p))->size() == 1);
    const Graph k = complete_graph(n);
    CHECK(brute_force_min_resolving(k, all_pairs_distances(k))->size() == n - 1);
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph c = cycle_graph(n);
    CHECK(brute_force_min_resolving(c, all_pairs_distances(c))->size() == 2);
  }
  for (std::size_t m = 2; m <= 9; ++m) {
    const Graph s = star_graph(m);
    CHECK(brute_force_min_resolving(s, all_pairs_distances(s))->size() == m - 1);
  }
}

TEST_CASE("at most one branch at a separation vertex avoids a resolving set") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = support::random_graph(seed, 4, 10, 1);
    const std::size_t n = g.vertex_count();
    const DistanceMatrix dm = all_pairs_distances(g);
    const VertexSet dp = solve(g).resolving_set;
    const VertexSet bf = *brute_force_min_resolving(g, dm);
    for (Vertex s = 0; s < n; ++s) {
      // Branches of g - s by flood fill.
      std::vector<int> branch(n, -1);
      int count = 0;
      for (Vertex start = 0; start < n; ++start) {
        if (start == s || branch[start] >= 0) continue;
        std::vector<Vertex> stack{start};
        branch[start] = count;
        while (!stack.empty()) {
          Vertex u = stack.back();
          stack.pop_back();
          for (Vertex w : g.neighbors(u))
            if (w != s && branch[w] < 0) branch[w] = count, stack.push_back(w);
        }
        ++count;
      }
      if (count < 3) continue;
      ++checked;
      for (const VertexSet* r : {&dp, &bf}) {
        std::vector<bool> hit(count, false);
        for (Vertex v : *r)
          if (v != s) hit[branch[v]] = true;
        CHECK(std::count(hit.begin(), hit.end(), false) <= 1);
      }
    }
  }
  CHECK(checked > 20);
}
