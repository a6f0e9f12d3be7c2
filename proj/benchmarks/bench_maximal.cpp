#include <benchmark/benchmark.h>

#include "orlicz/maximal.hpp"
#include "orlicz/proposition.hpp"
#include "orlicz/spectral.hpp"

using namespace orlicz;

static void BM_StrongMaximalFunction(benchmark::State& state) {
  const auto d = Filtration::dyadic(static_cast<int>(state.range(0)));
  const auto f = Filtration::tensor(d, d);
  const auto x = dirac(f, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(trace(maximal_function(f, x)));
}
BENCHMARK(BM_StrongMaximalFunction)->Arg(4)->Arg(6)->Arg(8);

static void BM_Cuculescu(benchmark::State& state) {
  const auto f = Filtration::matrix(static_cast<int>(state.range(0)));
  const auto x = rectangle(f, 1);
  for (auto _ : state) benchmark::DoNotOptimize(trace(cuculescu_projection(f, x, 0.3)));
}
BENCHMARK(BM_Cuculescu)->Arg(3)->Arg(5);

static void BM_WeakType(benchmark::State& state) {
  const auto d = Filtration::dyadic(static_cast<int>(state.range(0)));
  const auto f = Filtration::tensor(d, d);
  const std::vector<Element> tests{dirac(f, 1.0), dirac(f, 16.0)};
  const auto grid = dyadic_lambda_grid(-2, 2 * static_cast<int>(state.range(0)) + 6);
  const auto phi = YoungFunction::llog(1);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_weak_orlicz_constant(f, phi, tests, grid).constant);
}
BENCHMARK(BM_WeakType)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Proposition(benchmark::State& state) {
  const auto d = Filtration::dyadic(static_cast<int>(state.range(0)));
  const auto f = Filtration::tensor(d, d);
  const auto r = rectangle(f, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_proposition(f, r, 1.5, YoungFunction::llog(2), YoungFunction::chi_infinity(), 1.0).norm_ratio);
  }
}
BENCHMARK(BM_Proposition)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
