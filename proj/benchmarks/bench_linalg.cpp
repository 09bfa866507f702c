#include <benchmark/benchmark.h>

#include <random>

#include "qrep/algebra.hpp"
#include "qrep/linalg.hpp"

using namespace qrep;

static void BM_RrefRandomIdempotent(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  Matrix m = random_idempotent(n, rng, Field::rational()).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRandomIdempotent)->Arg(2)->Arg(3)->Arg(4);

static void BM_RankQAntisym(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  Field f = Field::ratfunc("q");
  Matrix a = q_antisym(uniform_q_params(m, Scalar::variable()), f).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_RankQAntisym)->Arg(2)->Arg(3)->Arg(4);

static void BM_Kron(benchmark::State& state) {
  Field q = Field::rational();
  Matrix a = antisym(static_cast<int>(state.range(0)), q).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, a));
}
BENCHMARK(BM_Kron)->Arg(2)->Arg(3);
