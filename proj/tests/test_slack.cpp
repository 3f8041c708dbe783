#include "support.hpp"

#include <tdm/errors.hpp>
#include <tdm/instances.hpp>
#include <tdm/slack.hpp>

#include <doctest.h>

#include <algorithm>

using namespace tdm;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Rational cost(const RVec& c, const SlackVec& y) {
  Rational s = 0;
  for (std::size_t e = 0; e < c.size(); ++e) s += c[e] * y[e];
  return s;
}

}  // namespace

TEST_SUITE("slack") {
  TEST_CASE("membership examples") {
    auto m = membership_Y(triangle(), {1, 0, 0});
    REQUIRE(m.member);
    CHECK(m.x == std::vector<std::int64_t>{0, 0, 1});
    CHECK(recover_x(triangle(), {1, 0, 0}) == std::vector<std::int64_t>{0, 0, 1});

    auto n = membership_Y(triangle(), {1, 1, 0});
    CHECK(!n.member);
    REQUIRE(!n.walk.empty());
    CHECK(n.walk.front() == n.walk.back());
    CHECK_THROWS_AS(recover_x(triangle(), {1, 1, 0}), PreconditionError);

    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      auto g = random_graph(rng, rng.range(1, 8), 1, 2);
      auto all = membership_Y(g, SlackVec(g.m(), 1));
      CHECK(all.member);
      CHECK(all.x == std::vector<std::int64_t>(g.n(), 0));
    }

    CHECK(!membership_Y(triangle(), {-1, 1, 1}).member);
    CHECK_THROWS_AS(membership_Y(triangle(), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(recover_x(Graph(2, {{0, 1}}), {1}), PreconditionError);
  }

  TEST_CASE("membership certificates") {
    Rng rng(2);
    int members = 0, others = 0;
    for (int trial = 0; trial < 600; ++trial) {
      auto g = random_graph(rng, rng.range(2, 8), 1, 2);
      SlackVec y(g.m());
      for (auto& q : y) q = rng.range(0, 3);
      auto m = membership_Y(g, y);
      CHECK(m.member == ref::in_Y_by_propagation(g, y, 40));
      if (m.member) {
        ++members;
        CHECK(slack_of(g, m.x) == y);
      } else {
        ++others;
        // a closed walk on which no x can produce y: alternating sum nonzero
        // on an even walk, or 1 - sum odd on an odd walk
        REQUIRE(m.walk.size() >= 3);
        CHECK(m.walk.front() == m.walk.back());
        const auto om = omega_walk(g, m.walk, y);
        if ((m.walk.size() - 1) % 2 == 0) CHECK(om != 0);
        else CHECK((1 - om) % 2 != 0);
      }
    }
    CHECK(members > 50);
    CHECK(others > 50);
  }

  TEST_CASE("membership agrees with the definition on tiny graphs") {
    Rng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
      auto g = random_graph(rng, rng.range(2, 4), 2, 3);
      SlackVec y(g.m());
      for (auto& q : y) q = rng.range(0, 2);
      CHECK(membership_Y(g, y).member == ref::in_Y_by_search(g, y, 10));
    }
  }

  TEST_CASE("slack vectors of stable sets") {
    Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      auto g = random_connected_graph(rng, rng.range(3, 8), rng.range(1, 5));
      if (is_bipartite(g)) continue;
      for (auto mask : ref::stable_masks(g)) {
        std::vector<std::int64_t> x(g.n());
        for (int v = 0; v < g.n(); ++v) x[v] = (mask >> v) & 1;
        auto y = slack_of(g, x);
        CHECK(recover_x(g, y) == x);
      }
    }
  }

  TEST_CASE("rounding examples") {
    Graph p3(3, {{0, 1}, {1, 2}});
    auto r = round_slack_vector(p3, {1, 1}, {2, 0});
    CHECK(r.set == VertexSet{0, 2});
    CHECK(r.slack_set.empty());
    CHECK(r.cost_f == 0);
    CHECK(r.cost_y == 2);

    // a slack set of a stable set on a non-bipartite graph stays put
    auto t = round_slack_vector(triangle(), {1, 1, 1}, {1, 0, 0});
    CHECK(t.set == VertexSet{2});
    CHECK(t.slack_set == std::vector<int>{0});
    CHECK(t.iterations == 0);

    CHECK_THROWS_AS(round_slack_vector(triangle(), {1, 1, 1}, {1, 1, 0}), PreconditionError);
  }

  TEST_CASE("rounding never increases cost") {
    Rng rng(5);
    int moved = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int n = rng.range(2, 10);
      auto g = random_connected_graph(rng, n, rng.range(0, 6));
      std::vector<std::int64_t> x(n);
      for (auto& v : x) v = rng.range(-1, 1);
      auto y = slack_of(g, x);
      if (std::any_of(y.begin(), y.end(), [](std::int64_t q) { return q < 0; })) continue;
      RVec c;
      for (int e = 0; e < g.m(); ++e) c.emplace_back(rng.range(0, 5));
      auto r = round_slack_vector(g, c, y);
      CHECK(is_stable(g, r.set));
      CHECK(r.slack_set == slack_edges(g, r.set));
      CHECK(r.cost_y == cost(c, y));
      CHECK(r.cost_f <= r.cost_y);
      CHECK(r.iterations <= static_cast<std::size_t>(n) * 4);
      if (r.iterations > 0) ++moved;
    }
    CHECK(moved > 20);
  }

  TEST_CASE("composition") {
    // triangle 0-1-2 as G_0 and the path 2-3-4 as G_1
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    const std::vector<std::vector<int>> parts{{0, 1, 2}, {3, 4}};
    auto ones = compose_slack(g, parts, {{1, 1, 1}, {1, 1}});
    CHECK(ones.member);
    CHECK(ones.x == std::vector<std::int64_t>(5, 0));

    auto single = compose_slack(g, {{0, 1, 2, 3, 4}}, {{1, 0, 0, 1, 1}});
    CHECK(single.member == membership_Y(g, {1, 0, 0, 1, 1}).member);
    CHECK(single.part_member.size() == 1);

    // every y in {0,1,2}^E, both directions
    int yes = 0, no = 0;
    SlackVec y(5, 0);
    while (true) {
      auto c = compose_slack(g, parts, {{y[0], y[1], y[2]}, {y[3], y[4]}});
      CHECK(c.member == membership_Y(g, y).member);
      CHECK(c.member == ref::in_Y_by_search(g, y, 6));
      (c.member ? yes : no)++;
      int k = 0;
      while (k < 5 && y[k] == 2) y[k++] = 0;
      if (k == 5) break;
      ++y[k];
    }
    CHECK(yes > 0);
    CHECK(no > 0);

    CHECK_THROWS_AS(compose_slack(g, {{0, 1, 2}, {1, 3, 4}}, {{1, 1, 1}, {0, 1, 1}}), PreconditionError);
    CHECK_THROWS_AS(compose_slack(g, {{0, 1, 2}, {3}}, {{1, 1, 1}, {1}}), PreconditionError);
    CHECK_THROWS_AS(compose_slack(g, {{0, 1, 2}, {0, 1, 2, 3, 4}}, {{1, 1, 1}, {1, 1, 1, 1, 1}}), PreconditionError);
  }

  TEST_CASE("edge subgraph") {
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    std::vector<int> map;
    auto h = edge_subgraph(g, {3, 4}, &map);
    CHECK(h.n() == 3);
    CHECK(h.m() == 2);
    CHECK(map == std::vector<int>{2, 3, 4});
  }
}
