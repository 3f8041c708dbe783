#include "support.hpp"

#include <tdm/errors.hpp>
#include <tdm/formats.hpp>
#include <tdm/instances.hpp>
#include <tdm/matrix.hpp>
#include <tdm/stableset.hpp>
#include <tdm/surface.hpp>

#include <doctest.h>

#include <algorithm>

using namespace tdm;

namespace {

bool is_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  auto s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool disjoint(const std::vector<std::vector<int>>& ps) {
  std::vector<int> all;
  for (const auto& p : ps) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

TEST_SUITE("instances") {
  TEST_CASE("elementary walls") {
    auto w2 = elementary_wall(2);
    CHECK(w2.g.n() == 6);
    CHECK(is_bipartite(w2.g));
    auto w3 = elementary_wall(3);
    CHECK(is_bipartite(w3.g));
    CHECK(ocp_brute(w3.g) == 0);
    for (int h = 2; h <= 6; ++h) {
      auto w = elementary_wall(h);
      CAPTURE(h);
      CHECK(w.h == h);
      CHECK(is_bipartite(w.g));
      CHECK(static_cast<int>(w.coord.size()) == w.g.n());
      REQUIRE(w.vertical.size() == static_cast<std::size_t>(h));
      for (const auto& q : w.vertical) CHECK(is_path(w.g, q));
      CHECK(disjoint(w.vertical));
      REQUIRE(w.horizontal.size() == static_cast<std::size_t>(h));
      for (const auto& p : w.horizontal) CHECK(is_path(w.g, p));
      CHECK(disjoint(w.horizontal));
      CHECK(w.linking.empty());
    }
  }

  TEST_CASE("escher walls") {
    auto e3 = escher_wall(3);
    CHECK(ocp_brute(e3.g) == 1);
    CHECK(!is_bipartite(e3.g));
    CHECK(oct_brute(e3.g) >= 1);
    CHECK(e3.linking.size() == 2);
    for (const auto& r : e3.linking) CHECK(is_path(e3.g, r));

    auto e4 = escher_wall(4);
    CHECK(ocp_brute(e4.g) == 1);
    CHECK(oct_brute(e4.g) >= 2);
    CHECK(e4.linking.size() == 3);
  }

  TEST_CASE("generators are deterministic") {
    Rng a(42), b(42);
    for (int k = 0; k < 10; ++k) {
      CHECK(random_graph(a, 8, 1, 3).edges() == random_graph(b, 8, 1, 3).edges());
      CHECK(random_connected_graph(a, 7, 3).edges() == random_connected_graph(b, 7, 3).edges());
    }
    IPGenOptions opt;
    opt.n = 4;
    opt.m = 5;
    CHECK(write_ip(random_two_per_row_ip(7, opt)) == write_ip(random_two_per_row_ip(7, opt)));
    CHECK(write_ip(random_two_per_column_ip(7, opt)) == write_ip(random_two_per_column_ip(7, opt)));
    CHECK(write_embed(random_embedded_fixture(a, 6, 9, 1, 2)) ==
          write_embed(random_embedded_fixture(b, 6, 9, 1, 2)));
    CHECK(write_graph(escher_wall(3).g) == write_graph(escher_wall(3).g));
  }

  TEST_CASE("generated programs carry their certificate") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      IPGenOptions opt;
      opt.n = 3 + static_cast<int>(seed % 3);
      opt.m = 3 + static_cast<int>(seed % 4);
      opt.delta_target = 1 + static_cast<std::int64_t>(seed % 3);
      CAPTURE(seed);
      for (const auto& ip : {random_two_per_row_ip(seed, opt), random_two_per_column_ip(seed, opt)}) {
        REQUIRE_NOTHROW(ip.validate());
        for (std::size_t j = 0; j < ip.n(); ++j) {
          CHECK(ip.lo(j).has_value());
          CHECK(ip.hi(j).has_value());
        }
        auto rows = std::vector<std::vector<Rational>>(ip.m(), std::vector<Rational>(ip.n()));
        for (std::size_t i = 0; i < ip.m(); ++i)
          for (std::size_t j = 0; j < ip.n(); ++j) rows[i][j] = ip.A(i, j);
        CHECK(ref::max_subdet(rows) <= opt.delta_target);
      }
      CHECK(random_two_per_row_ip(seed, opt).two_per_row());
      CHECK(random_two_per_column_ip(seed, opt).two_per_column());
    }

    // a unimodular target comes from a bipartite source
    IPGenOptions tu;
    tu.n = 5;
    tu.m = 6;
    tu.delta_target = 1;
    auto ip = random_two_per_row_ip(3, tu);
    CHECK(max_abs_subdeterminant(ip.A).delta <= 1);
  }

  TEST_CASE("bounded odd cycle packing sampler") {
    Rng rng(5);
    for (int k = 0; k < 30; ++k) {
      auto g = random_graph_ocp_at_most(rng, 7, 1, 2, 1);
      CHECK(ocp_brute(g) <= 1);
    }
  }

  TEST_CASE("projective K4") {
    auto eg = k4_projective_fixture();
    REQUIRE_NOTHROW(eg.validate());
    auto ft = trace_faces(eg);
    CHECK(ft.faces.size() == 3);
    for (const auto& f : ft.faces) CHECK(f.length() == 4);
    CHECK(ft.euler_genus == 1);
    CHECK(!ft.orientable);
    auto rep = verify_dual_representation(eg);
    CHECK(rep.equal);
    CHECK(rep.slack_vectors.size() == 5);
    CHECK(rep.circulations.size() == 5);
  }

  TEST_CASE("random embedded fixtures are valid") {
    Rng rng(11);
    for (int k = 0; k < 10; ++k) {
      auto eg = random_embedded_fixture(rng, 6, 9, 1, 2);
      REQUIRE_NOTHROW(eg.validate());
      CHECK(!is_bipartite(eg.g));
      CHECK(odd_cycles_one_sided(eg));
      auto ft = trace_faces(eg);
      CHECK(ft.euler_genus >= 1);
      CHECK(ft.euler_genus <= 2);
    }
  }

  TEST_CASE("gadget instances") {
    Rng rng(13);
    for (int k = 0; k < 50; ++k) {
      auto inst = random_gadget_instance(rng, rng.range(3, 5), rng.range(1, 4), rng.range(0, 3), 4);
      CHECK(inst.w_edges.size() == inst.w_cost.size());
      CHECK(inst.g_edges.size() == inst.g_cost.size());
      for (const auto& q : inst.w_cost) CHECK(q >= 0);
      CHECK(is_bipartite(Graph(inst.n, inst.w_edges)));
    }
    CHECK_THROWS_AS(random_gadget_instance(rng, 2, 1, 3, 4), PreconditionError);
  }
}
