#include "support.hpp"

#include <tdm/errors.hpp>
#include <tdm/instances.hpp>
#include <tdm/oracle.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace tdm;

namespace {

IPInstance one_var(long a, long b, long w) {
  IPInstance ip;
  ip.A = RationalMatrix{{a}};
  ip.b = {b};
  ip.w = {w};
  return ip;
}

IPInstance random_bounded_ip(Rng& rng) {
  IPInstance ip;
  std::size_t n = rng.range(1, 4), m = rng.range(1, 4);
  ip.A = RationalMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) ip.A(i, j) = rng.range(-3, 3);
    ip.b.emplace_back(rng.range(-3, 6));
  }
  for (std::size_t j = 0; j < n; ++j) {
    ip.w.emplace_back(rng.range(-3, 3));
    std::int64_t lo = rng.range(-3, 0);
    ip.lower.emplace_back(Rational(lo));
    ip.upper.emplace_back(Rational(lo + rng.range(0, 5)));
  }
  return ip;
}

// Same problem with variables listed in the order perm.
IPInstance permuted(const IPInstance& ip, const std::vector<std::size_t>& perm) {
  IPInstance p;
  std::vector<std::size_t> all(ip.m());
  std::iota(all.begin(), all.end(), 0);
  p.A = ip.A.submatrix(all, perm);
  p.b = ip.b;
  for (auto j : perm) {
    p.w.push_back(ip.w[j]);
    p.lower.push_back(ip.lower[j]);
    p.upper.push_back(ip.upper[j]);
  }
  return p;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("brute_force_ip examples") {
    auto r = brute_force_ip(one_var(1, 3, 1), SearchBox::uniform(1, 0, 5));
    CHECK(r.status == IPStatus::optimal);
    CHECK(r.objective == 3);
    CHECK(r.x == std::vector<Integer>{3});

    IPInstance empty = one_var(1, -1, 1);
    CHECK(brute_force_ip(empty, SearchBox::uniform(1, 0, 5)).status == IPStatus::infeasible);

    CHECK_THROWS_AS(brute_force_ip(one_var(1, 3, 1), SearchBox::uniform(1, 0, 100), 50), CapExceeded);
    CHECK_THROWS_AS(brute_force_ip(one_var(1, 3, 1), SearchBox::uniform(2, 0, 5)), std::invalid_argument);
  }

  TEST_CASE("search boxes") {
    auto b = SearchBox::around({Rational(1, 2), Rational(-3)}, 2);
    CHECK(b.range[0] == std::make_pair<std::int64_t, std::int64_t>(-1, 2));
    CHECK(b.range[1] == std::make_pair<std::int64_t, std::int64_t>(-5, -1));
    CHECK(b.volume() == 20);
    auto c = b.intersect(SearchBox::uniform(2, 0, 0));
    CHECK(c.empty());
  }

  TEST_CASE("ties go to the lexicographically smallest optimum") {
    IPInstance ip;
    ip.A = RationalMatrix{{1, 1}};
    ip.b = {1};
    ip.w = {1, 1};
    auto r = brute_force_ip(ip, SearchBox::uniform(2, 0, 1));
    CHECK(r.x == std::vector<Integer>{0, 1});
  }

  TEST_CASE("brute force, branch and bound and plain enumeration agree") {
    Rng rng(9);
    for (int t = 0; t < 300; ++t) {
      auto ip = random_bounded_ip(rng);
      auto want = ref::ip_by_enumeration(ip);
      auto bf = brute_force_ip(ip, SearchBox::from_bounds(ip));
      auto bb = branch_and_bound_ip(ip);
      REQUIRE((bf.status == IPStatus::optimal) == want.feasible);
      REQUIRE((bb.status == IPStatus::optimal) == want.feasible);
      if (!want.feasible) continue;
      CHECK(bf.objective == want.best);
      CHECK(bb.objective == want.best);
      CHECK(bf.x == *std::min_element(want.optima.begin(), want.optima.end()));
    }
  }

  TEST_CASE("branch and bound honours the cutoff") {
    auto ip = one_var(1, 3, 1);
    ip.lower = {Rational(0)};
    ip.upper = {Rational(5)};
    CHECK(branch_and_bound_ip(ip, Rational(3)).status == IPStatus::infeasible);
    CHECK(branch_and_bound_ip(ip, Rational(5, 2)).objective == 3);
  }

  TEST_CASE("optimal value is invariant under variable permutations") {
    Rng rng(10);
    for (int t = 0; t < 100; ++t) {
      auto ip = random_bounded_ip(rng);
      std::vector<std::size_t> perm(ip.n());
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      auto a = brute_force_ip(ip, SearchBox::from_bounds(ip));
      auto b = brute_force_ip(permuted(ip, perm), SearchBox::from_bounds(permuted(ip, perm)));
      REQUIRE(a.status == b.status);
      if (a.status == IPStatus::optimal) CHECK(a.objective == b.objective);
    }
  }

  TEST_CASE("enumerate_stable_sets examples") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(count_stable_sets(k4) == 5);
    CHECK(count_stable_sets(Graph(3)) == 8);
    std::vector<std::uint64_t> seen;
    enumerate_stable_sets(k4, [&](std::uint64_t m) { seen.push_back(m); });
    CHECK(seen.front() == 0);
    CHECK_THROWS_AS(count_stable_sets(Graph(30)), CapExceeded);
  }

  TEST_CASE("stable set counts match plain subset enumeration") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      Graph g = random_graph(rng, static_cast<int>(rng.range(0, 12)), 1, 3);
      std::set<std::uint64_t> got;
      std::size_t calls = 0;
      enumerate_stable_sets(g, [&](std::uint64_t m) {
        got.insert(m);
        ++calls;
      });
      auto want = ref::stable_masks(g);
      CHECK(calls == got.size());  // each exactly once
      CHECK(got == std::set<std::uint64_t>(want.begin(), want.end()));
    }
  }
}
