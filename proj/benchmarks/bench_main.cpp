#include <benchmark/benchmark.h>

#include "segal/bisset.hpp"
#include "segal/sset.hpp"

using namespace segal;

namespace {

fincat::FinCat category(int which) {
  switch (which) {
    case 0: return fincat::interval(2);
    case 1: return fincat::groupoid_interval(1);
    default: return fincat::walking_idempotent();
  }
}

void BM_Nerve(benchmark::State& state) {
  const auto c = category(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sset::nerve(c, d));
}
BENCHMARK(BM_Nerve)->ArgsProduct({{0, 1, 2}, {2, 3, 4}});

void BM_ClassifyingDiagram(benchmark::State& state) {
  const auto c = category(static_cast<int>(state.range(0)));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bisset::classifying_diagram(c, w, w));
}
BENCHMARK(BM_ClassifyingDiagram)->ArgsProduct({{0, 1, 2}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_Tau1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = sset::product(sset::standard_simplex(n, 2), sset::standard_simplex(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(sset::tau1(x));
}
BENCHMARK(BM_Tau1)->DenseRange(1, 3);

void BM_CountMaps(benchmark::State& state) {
  const auto x = sset::spine(static_cast<int>(state.range(0)), 2);
  const auto y = sset::nerve(fincat::walking_idempotent(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sset::count_maps(x, y));
}
BENCHMARK(BM_CountMaps)->DenseRange(2, 5);

void BM_Exponential(benchmark::State& state) {
  const auto x = sset::share(sset::standard_simplex(1, 2));
  const auto y = sset::share(sset::nerve(category(static_cast<int>(state.range(0))), 3));
  for (auto _ : state) benchmark::DoNotOptimize(sset::exponential(x, y, 2));
}
BENCHMARK(BM_Exponential)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
