#include "support.hpp"

#include <tdm/errors.hpp>
#include <tdm/instances.hpp>
#include <tdm/lp.hpp>
#include <tdm/stableset.hpp>

#include <doctest.h>

#include <algorithm>

using namespace tdm;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

RVec ones(int n) { return RVec(n, 1); }

// Smallest vertex set whose removal leaves a bipartite graph, by subset size.
int oct_by_search(const Graph& g) {
  const int n = g.n();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) >= best) continue;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (!((s >> v) & 1)) keep.push_back(v);
    if (is_bipartite(induced(g, keep))) best = __builtin_popcount(s);
  }
  return best;
}

LPProblem stable_lp(const Graph& g, const RVec& w) {
  LPProblem p;
  p.A = incidence_matrix(g);
  p.b.assign(g.m(), 1);
  p.w = w;
  p.lower.assign(g.n(), Rational(0));
  p.upper.assign(g.n(), std::nullopt);
  return p;
}

}  // namespace

TEST_SUITE("stableset") {
  TEST_CASE("brute force examples") {
    auto c5 = brute_force_stable_set({cycle(5), ones(5), {}}, StableMode::weight);
    CHECK(c5.value == 2);
    CHECK(is_stable(cycle(5), c5.set));

    auto e = brute_force_stable_set({Graph(2, {{0, 1}}), {1, 2}, {}}, StableMode::weight);
    CHECK(e.set == VertexSet{1});
    CHECK(e.value == 2);

    auto tri = brute_force_stable_set(StableSetInstance::from_costs(cycle(3), ones(3)), StableMode::cost);
    CHECK(tri.value == 1);
    CHECK(tri.set.size() == 1);

    CHECK_THROWS_AS(brute_force_stable_set({Graph(30), ones(30), {}}, StableMode::weight), CapExceeded);
  }

  TEST_CASE("branch and bound agrees with enumeration") {
    Rng rng(1);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = rng.range(1, 12);
      auto g = random_graph(rng, n, 1, 3);
      RVec w;
      for (int v = 0; v < n; ++v) w.emplace_back(rng.range(-2, 6));
      auto r = max_weight_stable_set(g, w);
      CHECK(is_stable(g, r.set));
      CHECK(r.value == ref::max_weight(g, w));
      Rational tot = 0;
      for (int v : r.set) tot += w[v];
      CHECK(tot == r.value);
    }
  }

  TEST_CASE("bipartite solver") {
    Graph p3(3, {{0, 1}, {1, 2}});
    auto r = solve_bipartite({p3, ones(3), {}});
    CHECK(r.set == VertexSet{0, 2});
    CHECK(r.value == 2);

    Graph k23(5);
    for (int a = 0; a < 2; ++a)
      for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
    auto k = solve_bipartite({k23, ones(5), {}});
    CHECK(k.set == VertexSet{2, 3, 4});

    CHECK_THROWS_AS(solve_bipartite({cycle(3), ones(3), {}}), PreconditionError);

    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.range(2, 16);
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((u + v) % 2 == 1 && rng.chance(1, 3)) g.add_edge(u, v);
      RVec w;
      for (int v = 0; v < n; ++v) w.emplace_back(rng.range(0, 7));
      auto got = solve_bipartite({g, w, {}});
      CHECK(is_stable(g, got.set));
      CHECK(got.value == brute_force_stable_set({g, w, {}}, StableMode::weight).value);
    }
  }

  TEST_CASE("minimum cost on bipartite graphs") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.range(2, 12);
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((u + v) % 2 == 1 && rng.chance(1, 2)) g.add_edge(u, v);
      RVec c;
      for (int e = 0; e < g.m(); ++e) c.emplace_back(rng.range(0, 4));
      auto r = min_cost_bipartite(g, c);
      CHECK(r.value == ref::min_slack_cost(g, c));
    }
  }

  TEST_CASE("odd cycle packing and transversal") {
    Graph bip(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(ocp_brute(bip) == 0);
    CHECK(oct_brute(bip) == 0);
    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(ocp_brute(two) == 2);
    CHECK(oct_brute(two) == 2);
    CHECK(ocp_brute(escher_wall(3).g) == 1);
    CHECK_THROWS_AS(ocp_brute(Graph(50)), CapExceeded);

    Rng rng(6);
    for (int trial = 0; trial < 120; ++trial) {
      auto g = random_graph(rng, rng.range(3, 9), 2, 5);
      CHECK(ocp_brute(g) == ref::ocp_by_search(g));
      CHECK(oct_brute(g) == oct_by_search(g));
    }
  }

  TEST_CASE("induced odd cycles") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(induced_odd_cycles(k4, 0xF).size() == 4);
    CHECK(induced_odd_cycles(cycle(5), 0x1F).size() == 1);
    CHECK(induced_odd_cycles(cycle(6), 0x3F).empty());
  }

  TEST_CASE("resilience") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(resilience_check(k4, 1).resilient);
    auto r2 = resilience_check(k4, 2);
    CHECK(!r2.resilient);
    CHECK(r2.witness.size() == 2);
    CHECK(r2.ocp == 1);

    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto r = resilience_check(two, 0);
    CHECK(!r.resilient);
    CHECK(r.witness.empty());
  }

  TEST_CASE("edge induced reduction examples") {
    auto tri = edge_induced_reduce(cycle(3), ones(3));
    CHECK(tri.s0.empty());
    CHECK(tri.s1.empty());
    CHECK(tri.c == RVec(3, Rational(1, 2)));
    CHECK(tri.w_prime == ones(3));
    CHECK(tri.x_star == RVec(3, Rational(1, 2)));

    Graph iso(2, {});
    auto r = edge_induced_reduce(iso, {5, 0});
    CHECK(std::find(r.s1.begin(), r.s1.end(), 0) != r.s1.end());
    CHECK(r.w_prime[0] == 0);
    CHECK(lift_edge_induced(r, {}) == VertexSet{0});
  }

  TEST_CASE("edge induced reduction preserves optimality") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.range(1, 10);
      auto g = random_graph(rng, n, 1, 3);
      RVec w;
      for (int v = 0; v < n; ++v) w.emplace_back(rng.range(0, 6));
      auto r = edge_induced_reduce(g, w);
      CHECK(induced_weights(g, r.c) == r.w_prime);
      for (const auto& q : r.c) CHECK(q >= 0);
      auto sp = max_weight_stable_set(g, r.w_prime);
      auto s = lift_edge_induced(r, sp.set);
      CHECK(is_stable(g, s));
      Rational ws = 0;
      for (int v : s) ws += w[v];
      CHECK(ws == ref::max_weight(g, w));
    }
  }

  TEST_CASE("slack cost identity") {
    auto inst = StableSetInstance::from_costs(cycle(3), ones(3));
    CHECK(inst.w == RVec(3, 2));
    CHECK(slack_cost(inst, {0}) == 1);
    CHECK(slack_identity_holds(inst, {0}));
    CHECK(slack_cost(inst, {}) == 3);
    CHECK_THROWS_AS(slack_cost(inst, {0, 1}), PreconditionError);

    auto p3 = StableSetInstance::from_costs(Graph(3, {{0, 1}, {1, 2}}), {2, 5});
    CHECK(slack_cost(p3, {1}) == 0);
    CHECK(slack_cost(p3, {0, 2}) == 0);
    CHECK(slack_edges(p3.g, {0}) == std::vector<int>{1});

    Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
      auto ci = random_cost_instance(rng, rng.range(1, 9), 1, 2, 5);
      for (auto mask : ref::stable_masks(ci.g)) {
        auto s = from_mask(mask);
        CHECK(slack_identity_holds(ci, s));
        CHECK(slack_cost(ci, s) == ref::mask_slack_cost(ci.g, mask, ci.c));
      }
    }
  }

  TEST_CASE("half point optimum has a 0/1 integer partner") {
    Rng rng(12);
    int hits = 0;
    for (int trial = 0; trial < 2000 && hits < 30; ++trial) {
      const int n = rng.range(3, 6);
      auto g = random_connected_graph(rng, n, rng.range(1, 4));
      std::vector<std::int64_t> wi;
      RVec w;
      for (int v = 0; v < n; ++v) {
        wi.push_back(rng.range(1, 3));
        w.emplace_back(wi.back());
      }
      auto p = stable_lp(g, w);
      p.lower.assign(n, std::nullopt);
      auto lp = solve(p);
      if (lp.status != LPStatus::optimal) continue;
      Rational half = 0;
      for (const auto& q : w) half += q / 2;
      if (lp.objective != half) continue;
      ++hits;
      // integer optimum over a box that contains every relevant point
      std::int64_t best = INT64_MIN;
      std::vector<std::int64_t> x(n, -3);
      while (true) {
        bool ok = true;
        for (const auto& [u, v] : g.edges()) ok = ok && x[u] + x[v] <= 1;
        if (ok) {
          std::int64_t val = 0;
          for (int v = 0; v < n; ++v) val += wi[v] * x[v];
          best = std::max(best, val);
        }
        int k = 0;
        while (k < n && x[k] == 3) x[k++] = -3;
        if (k == n) break;
        ++x[k];
      }
      CHECK(Rational(best) == ref::max_weight(g, w));
    }
    CHECK(hits > 5);
  }
}
