#include "verify.hpp"

#include <tdm/colpipe.hpp>
#include <tdm/errors.hpp>
#include <tdm/gadget.hpp>
#include <tdm/instances.hpp>
#include <tdm/oracle.hpp>
#include <tdm/rowpipe.hpp>
#include <tdm/slack.hpp>
#include <tdm/surface.hpp>

#include <functional>
#include <map>

namespace tdmcli {

using namespace tdm;

namespace {

using Trial = std::function<std::string(std::uint64_t)>;  // empty string = pass

std::string prop_dual(std::uint64_t seed) {
  Rng rng(seed);
  // sizes where random embeddings with cycle faces are common enough
  static const std::pair<int, int> sizes[] = {{4, 6}, {5, 8}, {6, 8}, {6, 9}, {7, 10}};
  auto [n, m] = sizes[rng.range(0, 4)];
  auto eg = random_embedded_fixture(rng, n, m, 1, 3);
  auto rep = verify_dual_representation(eg);
  return rep.equal ? "" : "slack vectors and homologous circulations differ";
}

std::string gadget(std::uint64_t seed) {
  Rng rng(seed);
  int gv = static_cast<int>(rng.range(3, 6));
  int q = static_cast<int>(rng.range(0, 3));
  auto inst = random_gadget_instance(rng, gv, static_cast<int>(rng.range(1, 4)), q, 5);
  auto res = gadget_replace(inst);
  auto u = StableSetInstance::from_costs(inst.union_graph(), inst.union_cost());
  auto p = StableSetInstance::from_costs(res.gplus, res.cplus);
  auto a = brute_force_stable_set(u, StableMode::cost);
  auto b = brute_force_stable_set(p, StableMode::cost);
  if (a.value != b.value) return "optimal costs differ";
  if (slack_cost(u, res.map_back(b.set)) != a.value) return "mapped-back set is not optimal";
  return "";
}

std::string pipeline(std::uint64_t seed, bool rows) {
  Rng rng(seed);
  IPGenOptions o;
  o.n = static_cast<int>(rng.range(2, 8));
  o.m = static_cast<int>(rng.range(2, 12));
  o.delta_target = rng.range(1, 4);
  auto ip = rows ? random_two_per_row_ip(rng.next(), o) : random_two_per_column_ip(rng.next(), o);
  auto want = brute_force_ip(ip, SearchBox::from_bounds(ip));
  auto got = rows ? solve_two_per_row(ip, o.delta_target).result : solve_two_per_column(ip, o.delta_target).result;
  if (want.status != got.status) return "status differs from the oracle";
  if (want.status == IPStatus::optimal && want.objective != got.objective) return "objective differs from the oracle";
  return "";
}

std::string slack(std::uint64_t seed) {
  Rng rng(seed);
  int n = static_cast<int>(rng.range(2, 10));
  Graph g = random_graph(rng, n, 1, 3);
  RVec c;
  for (int e = 0; e < g.m(); ++e) c.emplace_back(rng.range(0, 6));
  SlackVec y;
  for (int tries = 0;; ++tries) {
    std::vector<std::int64_t> x(n);
    for (auto& v : x) v = rng.range(-1, 1);
    y = slack_of(g, x);
    bool ok = true;
    for (auto v : y) ok = ok && v >= 0 && v <= 4;
    if (ok) break;
    if (tries > 1000) {
      y = slack_of(g, std::vector<std::int64_t>(n, 0));
      break;
    }
  }
  auto r = round_slack_vector(g, c, y);
  if (!is_stable(g, r.set)) return "rounded set is not stable";
  if (r.slack_set != slack_edges(g, r.set)) return "slack set differs from sigma(S)";
  if (r.cost_f > r.cost_y) return "rounding increased the cost";
  return "";
}

const std::map<std::string, Trial>& suites() {
  static const std::map<std::string, Trial> s{
      {"prop-dual", prop_dual},
      {"gadget", gadget},
      {"rowpipe", [](std::uint64_t k) { return pipeline(k, true); }},
      {"colpipe", [](std::uint64_t k) { return pipeline(k, false); }},
      {"slack", slack},
  };
  return s;
}

}  // namespace

bool is_suite(const std::string& name) { return suites().count(name) > 0; }

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
  const auto& trial = suites().at(name);
  SuiteResult r;
  r.trials = trials;
  Rng master(seed);
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = master.next();
    auto msg = trial(s);
    if (msg.empty()) ++r.passed;
    else if (r.first_failure.empty()) r.first_failure = "trial " + std::to_string(t) + ": " + msg;
  }
  return r;
}

}  // namespace tdmcli
