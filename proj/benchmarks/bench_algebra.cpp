#include <benchmark/benchmark.h>

#include "qrep/algebra.hpp"

using namespace qrep;

static void BM_GradedDimSymmetric(benchmark::State& state) {
  QuadraticAlgebra x = algebra_X(antisym(static_cast<int>(state.range(0)), Field::rational()));
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dim(x, k));
}
BENCHMARK(BM_GradedDimSymmetric)->Args({2, 5})->Args({3, 4})->Args({4, 3});

static void BM_CohomAlgebra(benchmark::State& state) {
  Field f = Field::ratfunc("q");
  Idempotent a = q_antisym(uniform_q_params(static_cast<int>(state.range(0)), Scalar::variable()), f);
  for (auto _ : state) benchmark::DoNotOptimize(cohom_algebra(a, a));
}
BENCHMARK(BM_CohomAlgebra)->Arg(2)->Arg(3);

static void BM_WhiteProduct(benchmark::State& state) {
  Field q = Field::rational();
  QuadraticAlgebra a = algebra_X(antisym(2, q)), b = algebra_Xi(so_B(2, q));
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b, ProductKind::white));
}
BENCHMARK(BM_WhiteProduct);
