#include "annulus/cluster.hpp"
#include "annulus/enumerate.hpp"
#include "annulus/limits.hpp"
#include "annulus/qp.hpp"
#include "annulus/tquiver.hpp"
#include "annulus/transforms.hpp"

#include <benchmark/benchmark.h>

using namespace annulus;

namespace {

Triangulation c22() { return fan_triangulation({2, 2}); }

void BM_QuiverOf(benchmark::State& state) {
  const Triangulation t = fan_triangulation({int(state.range(0)), int(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(quiver_of(t));
}
BENCHMARK(BM_QuiverOf)->Arg(2)->Arg(4)->Arg(8);

void BM_Flip(benchmark::State& state) {
  const Triangulation t = c22();
  for (auto _ : state) benchmark::DoNotOptimize(flip(t, "d3"));
}
BENCHMARK(BM_Flip);

void BM_Enumerate(benchmark::State& state) {
  const AnnulusShape s{int(state.range(0)), int(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(s, TriangulationKind::Finite));
}
BENCHMARK(BM_Enumerate)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_Commutativity(benchmark::State& state) {
  const Triangulation t = fan_triangulation({int(state.range(0)), int(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(check_commutativity(t));
}
BENCHMARK(BM_Commutativity)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_DehnLimit(benchmark::State& state) {
  const Triangulation t = c22();
  for (auto _ : state) benchmark::DoNotOptimize(dehn_limit(t, Direction::Plus));
}
BENCHMARK(BM_DehnLimit);

void BM_ContractWithShape(benchmark::State& state) {
  const Triangulation t = c22();
  const Quiver q = quiver_of(t), shape = shape_of(t);
  const auto order = bridging_cyclic_order(t);
  for (auto _ : state) benchmark::DoNotOptimize(contract_with_shape(q, shape, order));
}
BENCHMARK(BM_ContractWithShape);

void BM_QPMutate(benchmark::State& state) {
  const QP qp = potential_of(c22());
  for (auto _ : state) benchmark::DoNotOptimize(qp_mutate(qp, "d2"));
}
BENCHMARK(BM_QPMutate);

void BM_ExchangeGraph(benchmark::State& state) {
  const Seed s = initial_seed(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exchange_graph(s, 1000, 1000));
}
BENCHMARK(BM_ExchangeGraph)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
