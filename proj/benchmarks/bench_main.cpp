#include <benchmark/benchmark.h>

#include <random>

#include "quiverlab/orthogonality.hpp"
#include "quiverlab/presets.hpp"

using namespace qlab;

namespace {

Quiver linear(int n) {
  Quiver q(n);
  for (int i = 1; i < n; ++i) q.set_arrows(i, i + 1, 1);
  return q;
}

void BM_Mutate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto iq = make_framed(linear(n));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(1, n);
  for (auto _ : state) {
    iq = mutate(iq, pick(rng));
    benchmark::DoNotOptimize(iq);
  }
}
BENCHMARK(BM_Mutate)->Arg(3)->Arg(6)->Arg(10);

void BM_EnumerateMgsLinear(benchmark::State& state) {
  const auto q = linear(static_cast<int>(state.range(0)));
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_mgs(q).sequences.size();
  state.counters["sequences"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMgsLinear)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateMgsFourVertexAlgebra(benchmark::State& state) {
  const auto q = load_preset("example33").quiver.count_quiver();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mgs(q));
}
BENCHMARK(BM_EnumerateMgsFourVertexAlgebra)->Unit(benchmark::kMillisecond);

void BM_HomSpace(benchmark::State& state) {
  const auto bq = load_preset("example33").algebra();
  const auto catalog = enumerate_thin_schurian(bq);
  const auto& full = catalog.modules.back();
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(full, full, bq));
}
BENCHMARK(BM_HomSpace);

void BM_HomMatrix(benchmark::State& state) {
  const auto bq = load_preset("example33").algebra();
  const auto catalog = enumerate_thin_schurian(bq);
  for (auto _ : state) benchmark::DoNotOptimize(hom_matrix(catalog, 1));
}
BENCHMARK(BM_HomMatrix)->Unit(benchmark::kMicrosecond);

void BM_ThinCatalog(benchmark::State& state) {
  const auto bq = load_preset("example33").algebra();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_thin_schurian(bq));
}
BENCHMARK(BM_ThinCatalog)->Unit(benchmark::kMillisecond);

void BM_SampledCatalogD4(benchmark::State& state) {
  const BoundQuiver d4(NamedQuiver(4, {{"a", 1, 4}, {"b", 2, 4}, {"c", 3, 4}}));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_schurian(d4, 2, 3));
}
BENCHMARK(BM_SampledCatalogD4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
