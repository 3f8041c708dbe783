#include <benchmark/benchmark.h>

#include <tdm/colpipe.hpp>
#include <tdm/instances.hpp>
#include <tdm/lp.hpp>
#include <tdm/matrix.hpp>
#include <tdm/oracle.hpp>
#include <tdm/rowpipe.hpp>
#include <tdm/slack.hpp>
#include <tdm/stableset.hpp>
#include <tdm/surface.hpp>

using namespace tdm;

namespace {

IPGenOptions opts(int n) {
  IPGenOptions o;
  o.n = n;
  o.m = n + 2;
  o.delta_target = 2;
  o.box_volume = 20000;
  return o;
}

}  // namespace

static void BM_SimplexRowIP(benchmark::State& state) {
  auto ip = random_two_per_row_ip(3, opts(static_cast<int>(state.range(0))));
  auto lp = ip.relaxation();
  for (auto _ : state) benchmark::DoNotOptimize(solve(lp));
}
BENCHMARK(BM_SimplexRowIP)->DenseRange(4, 8, 2);

static void BM_RowPipeline(benchmark::State& state) {
  auto ip = random_two_per_row_ip(5, opts(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_per_row(ip, 2));
}
BENCHMARK(BM_RowPipeline)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_ColumnPipeline(benchmark::State& state) {
  auto ip = random_two_per_column_ip(5, opts(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_per_column(ip, 2));
}
BENCHMARK(BM_ColumnPipeline)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_BruteForceIP(benchmark::State& state) {
  auto ip = random_two_per_row_ip(5, opts(static_cast<int>(state.range(0))));
  auto box = SearchBox::from_bounds(ip);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ip(ip, box));
}
BENCHMARK(BM_BruteForceIP)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_SubdeterminantScan(benchmark::State& state) {
  Rng rng(7);
  const int n = static_cast<int>(state.range(0));
  auto a = incidence_matrix(random_connected_graph(rng, n, n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(max_abs_subdeterminant(a, n));
}
BENCHMARK(BM_SubdeterminantScan)->DenseRange(5, 9, 2);

static void BM_MaxWeightStableSet(benchmark::State& state) {
  Rng rng(11);
  const int n = static_cast<int>(state.range(0));
  auto g = random_graph(rng, n, 1, 4);
  RVec w;
  for (int v = 0; v < n; ++v) w.emplace_back(rng.range(1, 9));
  for (auto _ : state) benchmark::DoNotOptimize(max_weight_stable_set(g, w));
}
BENCHMARK(BM_MaxWeightStableSet)->RangeMultiplier(2)->Range(8, 32);

static void BM_OcpBrute(benchmark::State& state) {
  auto w = escher_wall(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ocp_brute(w.g));
}
BENCHMARK(BM_OcpBrute)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RoundSlack(benchmark::State& state) {
  Rng rng(13);
  const int n = static_cast<int>(state.range(0));
  auto g = random_connected_graph(rng, n, n);
  std::vector<std::int64_t> x(n, 0);
  auto y = slack_of(g, x);
  RVec c(g.m(), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(round_slack_vector(g, c, y));
}
BENCHMARK(BM_RoundSlack)->RangeMultiplier(2)->Range(8, 64);

static void BM_DualRepresentation(benchmark::State& state) {
  auto eg = k4_projective_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(verify_dual_representation(eg));
}
BENCHMARK(BM_DualRepresentation);

BENCHMARK_MAIN();
