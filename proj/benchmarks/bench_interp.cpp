#include <benchmark/benchmark.h>

#include "orlicz/interp.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

static void BM_ConstantF(benchmark::State& state) {
  const double p = 1.0 + 1.0 / static_cast<double>(state.range(0));
  const auto phi = YoungFunction::llog(2), chi = YoungFunction::chi_infinity();
  for (auto _ : state) benchmark::DoNotOptimize(constant_F(p, phi, chi).value);
}
BENCHMARK(BM_ConstantF)->Arg(2)->Arg(20)->Arg(500);

static void BM_StrongInfty(benchmark::State& state) {
  const double p = 1.0 + 1.0 / static_cast<double>(state.range(0));
  const auto phi = YoungFunction::llog(1);
  for (auto _ : state) benchmark::DoNotOptimize(constant_F_strong_infty(p, phi).value);
}
BENCHMARK(BM_StrongInfty)->Arg(2)->Arg(500);

static void BM_Indices(benchmark::State& state) {
  const auto phi = YoungFunction::llog(2);
  for (auto _ : state) benchmark::DoNotOptimize(matuszewska_indices(phi).upper);
}
BENCHMARK(BM_Indices);

static void BM_GrowthFit(benchmark::State& state) {
  const auto phi = YoungFunction::llog(1);
  for (auto _ : state) benchmark::DoNotOptimize(growth_exponent_fit(phi, {1.02, 1.01, 1.005, 1.002}).exponent);
}
BENCHMARK(BM_GrowthFit);

BENCHMARK_MAIN();
