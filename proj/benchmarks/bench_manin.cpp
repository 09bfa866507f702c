#include <benchmark/benchmark.h>

#include "qrep/context.hpp"
#include "qrep/gallery.hpp"
#include "qrep/manin.hpp"

using namespace qrep;

static void BM_CheckManinUniversal(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  Idempotent a = antisym(m, Field::rational());
  ContextPtr ctx = qa_context(cohom_algebra(a, a), 2);
  FirstOrderMatrix u = FirstOrderMatrix::universal(m, m, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(check_manin(a, a, u));
}
BENCHMARK(BM_CheckManinUniversal)->Arg(2)->Arg(3);

static void BM_QaContext(benchmark::State& state) {
  Idempotent a = antisym(static_cast<int>(state.range(0)), Field::rational());
  QuadraticAlgebra c = cohom_algebra(a, a);
  for (auto _ : state) benchmark::DoNotOptimize(qa_context(c, 2));
}
BENCHMARK(BM_QaContext)->Arg(2)->Arg(3);

static void BM_GalleryScenario(benchmark::State& state) {
  const auto& info = gallery_scenarios()[static_cast<size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(info.name));
  state.SetLabel(info.name);
}
BENCHMARK(BM_GalleryScenario)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
