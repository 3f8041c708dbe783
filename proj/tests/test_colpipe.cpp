#include "support.hpp"

#include <tdm/colpipe.hpp>
#include <tdm/errors.hpp>
#include <tdm/instances.hpp>
#include <tdm/matrix.hpp>
#include <tdm/oracle.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace tdm;

namespace {

std::vector<std::size_t> iota_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

IPGenOptions small_opts(std::uint64_t seed) {
  IPGenOptions opt;
  opt.n = 2 + static_cast<int>(seed % 4);
  opt.m = 2 + static_cast<int>(seed % 5);
  opt.delta_target = 1 + static_cast<std::int64_t>(seed % 4);
  opt.box_volume = 3000;
  return opt;
}

}  // namespace

TEST_SUITE("colpipe") {
  TEST_CASE("grouping examples") {
    RationalMatrix a{{1, 1, 2}};
    CHECK(group_columns(a, {}).groups.empty());
    auto g = group_columns(a, {0});
    REQUIRE(g.groups.size() == 2);
    CHECK(g.groups[0] == std::vector<std::size_t>{0, 1});
    CHECK(g.groups[1] == std::vector<std::size_t>{2});
    CHECK(g.signature[1] == RVec{2});

    RationalMatrix b{{1, 0, 1}, {0, 1, 0}};
    auto h = group_columns(b, {0});
    REQUIRE(h.groups.size() == 1);
    CHECK(h.groups[0] == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("grouping is a partition of the nonzero columns by their I part") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = rng.range(1, 4), n = rng.range(1, 6);
      RationalMatrix a(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.range(-1, 1);
      std::vector<std::size_t> I;
      for (std::size_t i = 0; i < m; ++i)
        if (rng.chance(1, 2)) I.push_back(i);
      auto g = group_columns(a, I);
      std::vector<int> seen(n, 0);
      for (std::size_t t = 0; t < g.groups.size(); ++t)
        for (auto j : g.groups[t]) {
          ++seen[j];
          for (std::size_t r = 0; r < I.size(); ++r) CHECK(a(I[r], j) == g.signature[t][r]);
        }
      for (std::size_t j = 0; j < n; ++j) {
        bool zero = std::all_of(I.begin(), I.end(), [&](std::size_t i) { return a(i, j) == 0; });
        CHECK(seen[j] == (zero ? 0 : 1));
      }
      for (std::size_t t = 0; t < g.signature.size(); ++t)
        for (std::size_t u = t + 1; u < g.signature.size(); ++u) CHECK(g.signature[t] != g.signature[u]);
    }
  }

  TEST_CASE("base program examples") {
    IPInstance ip;
    ip.A = RationalMatrix{{1, 1}, {1, -1}};
    ip.b = {3, 1};
    ip.w = {1, 1};
    auto base = build_base_ip(ip, {}, ColumnGrouping{}, {});
    CHECK(base.A == ip.A);
    CHECK(base.b == ip.b);

    // x0 taken out of [[3,1,0],[0,1,1],[1,0,-1]] with rows 0 and 2 cleared
    IPInstance red;
    red.A = RationalMatrix{{1, 0}, {1, 1}, {0, -1}};
    red.b = {4, 2, 1};
    red.w = {1, 1};
    auto g = group_columns(red.A, {0, 2});
    REQUIRE(g.groups.size() == 2);
    auto b2 = build_base_ip(red, {0, 2}, g, {1, -1});
    CHECK(b2.A == RationalMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}});
    CHECK(b2.b == RVec{1, -1, -1, 1, 2});

    IPInstance three;
    three.A = RationalMatrix{{1}, {1}, {1}};
    three.b = {1, 1, 1};
    three.w = {1};
    auto g3 = group_columns(three.A, {0});
    CHECK_THROWS_AS(build_base_ip(three, {0}, g3, {0}), PreconditionError);
    CHECK_THROWS_AS(build_base_ip(three, {0}, g3, {}), std::invalid_argument);
  }

  TEST_CASE("base programs of generated instances respect the two-use limit") {
    int with_groups = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto ip = random_two_per_column_ip(seed, small_opts(seed));
      auto cs = find_column_clearing_sets(ip.A, small_opts(seed).delta_target);
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < ip.n(); ++j)
        if (std::find(cs.cols.begin(), cs.cols.end(), j) == cs.cols.end()) rest.push_back(j);
      IPInstance red = ip;
      red.A = ip.A.submatrix(iota_n(ip.m()), rest);
      red.w.assign(rest.size(), 0);
      red.lower.assign(rest.size(), Rational(0));
      red.upper.assign(rest.size(), Rational(0));
      auto g = group_columns(red.A, cs.rows);
      if (!g.groups.empty()) ++with_groups;
      IPInstance base;
      REQUIRE_NOTHROW(base = build_base_ip(red, cs.rows, g, std::vector<std::int64_t>(g.groups.size(), 0)));
      for (std::size_t i = 2 * g.groups.size(); i < base.m(); ++i)
        for (std::size_t j = 0; j < base.n(); ++j) CHECK(abs(base.A(i, j)) <= 1);
    }
    CHECK(with_groups > 10);
  }

  TEST_CASE("lifted base solutions are feasible for the original") {
    Rng rng(17);
    int points = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto opt = small_opts(seed);
      opt.box_volume = 300;
      auto ip = random_two_per_column_ip(seed, opt);
      auto cs = find_column_clearing_sets(ip.A, opt.delta_target);
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < ip.n(); ++j)
        if (std::find(cs.cols.begin(), cs.cols.end(), j) == cs.cols.end()) rest.push_back(j);
      // random values on J, random sums
      std::vector<std::int64_t> z;
      for (auto j : cs.cols) z.push_back(rng.range(to_i64(*ip.lower[j]), to_i64(*ip.upper[j])));
      IPInstance red;
      red.A = ip.A.submatrix(iota_n(ip.m()), rest);
      red.b = ip.b;
      for (std::size_t i = 0; i < ip.m(); ++i)
        for (std::size_t q = 0; q < cs.cols.size(); ++q) red.b[i] -= ip.A(i, cs.cols[q]) * z[q];
      for (auto j : rest) {
        red.w.push_back(ip.w[j]);
        red.lower.push_back(ip.lower[j]);
        red.upper.push_back(ip.upper[j]);
      }
      auto g = group_columns(red.A, cs.rows);
      for (int round = 0; round < 4; ++round) {
        std::vector<std::int64_t> sums;
        for (std::size_t t = 0; t < g.groups.size(); ++t) sums.push_back(rng.range(-3, 3));
        auto base = build_base_ip(red, cs.rows, g, sums);
        ref::for_each_point(base, [&](const std::vector<Integer>& y) {
          if (!base.feasible(y)) return;
          // base constraints hold; the cleared rows follow only if the sums fit them
          std::vector<Integer> x(ip.n());
          for (std::size_t q = 0; q < cs.cols.size(); ++q) x[cs.cols[q]] = z[q];
          for (std::size_t j = 0; j < rest.size(); ++j) x[rest[j]] = y[j];
          bool sums_fit = true;
          for (std::size_t r = 0; r < cs.rows.size(); ++r) {
            Rational s = 0;
            for (std::size_t t = 0; t < g.groups.size(); ++t) s += g.signature[t][r] * sums[t];
            if (s > red.b[cs.rows[r]]) sums_fit = false;
          }
          CHECK(ip.feasible(x) == sums_fit);
          ++points;
        });
      }
    }
    CHECK(points > 50);
  }

  TEST_CASE("pipeline examples") {
    IPInstance knap;
    knap.A = RationalMatrix{{2}};
    knap.b = {3};
    knap.w = {1};
    auto r = solve_two_per_column(knap, 2);
    REQUIRE(r.result.status == IPStatus::optimal);
    CHECK(r.result.x == std::vector<Integer>{1});
    CHECK(r.result.objective == 1);

    IPInstance bad;
    bad.A = RationalMatrix{{1, 1}, {-1, -1}};
    bad.b = {0, -1};
    bad.w = {1, 0};
    bad.lower = {Rational(-2), Rational(-2)};
    bad.upper = {Rational(2), Rational(2)};
    CHECK(solve_two_per_column(bad, 1).result.status == IPStatus::infeasible);

    IPInstance ray;
    ray.A = RationalMatrix{{1, -1}};
    ray.b = {0};
    ray.w = {1, 1};
    CHECK(solve_two_per_column(ray, 1).result.status == IPStatus::unbounded);

    CHECK_THROWS_AS(solve_two_per_column(IPInstance{RationalMatrix{{1}, {1}, {1}}, {1, 1, 1}, {1}, {}, {}}, 1),
                    PreconditionError);
  }

  TEST_CASE("custom base solver sees only two-use programs") {
    auto ip = random_two_per_column_ip(9, small_opts(9));
    std::size_t calls = 0;
    auto r = solve_two_per_column(ip, small_opts(9).delta_target, [&](const IPInstance& p, std::optional<Rational> c) {
      ++calls;
      for (std::size_t j = 0; j < p.n(); ++j) {
        std::set<std::size_t> rows;
        for (std::size_t i = 0; i < p.m(); ++i)
          if (p.A(i, j) != 0) rows.insert(i);
        CHECK(rows.size() <= 3);
      }
      return branch_and_bound_ip(p, c);
    });
    CHECK(calls == r.result.guesses_explored);
    CHECK(r.result.status == branch_and_bound_ip(ip).status);
  }

  TEST_CASE("pipeline matches enumeration on random instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto opt = small_opts(seed);
      auto ip = random_two_per_column_ip(seed, opt);
      auto want = ref::ip_by_enumeration(ip);
      auto got = solve_two_per_column(ip, opt.delta_target);
      CAPTURE(seed);
      REQUIRE((got.result.status == IPStatus::optimal) == want.feasible);
      if (!want.feasible) continue;
      CHECK(got.result.objective == want.best);
      CHECK(ip.value(got.result.x) == want.best);
    }
  }
}
