#include <benchmark/benchmark.h>

#include "orlicz/random.hpp"
#include "orlicz/spectral.hpp"

using namespace orlicz;

static void BM_BinaryDecomposition(benchmark::State& state) {
  Rng rng(0);
  const auto alg = TracialAlgebra::full(static_cast<int>(state.range(0)));
  const auto x = random_psd(rng, alg, 0.0, 0.999);
  for (auto _ : state) benchmark::DoNotOptimize(binary_decomposition(x, 1, 40).residual);
}
BENCHMARK(BM_BinaryDecomposition)->Arg(8)->Arg(16)->Arg(64);

static void BM_SingularNumbers(benchmark::State& state) {
  Rng rng(1);
  const auto alg = TracialAlgebra::full(static_cast<int>(state.range(0)));
  const auto x = random_hermitian(rng, alg);
  for (auto _ : state) benchmark::DoNotOptimize(singular_numbers(x).integral());
}
BENCHMARK(BM_SingularNumbers)->Arg(16)->Arg(128);

static void BM_DiagonalDomination(benchmark::State& state) {
  Rng rng(2);
  const auto alg = TracialAlgebra::full(16);
  const auto q = random_disjoint_projections(rng, alg, 4);
  const auto x = random_psd(rng, alg, 0.0, 1.0);
  const std::vector<double> d{1.0, 2.0, 0.5, 3.0};
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_domination_check(q, d, x).min_eigenvalue);
}
BENCHMARK(BM_DiagonalDomination);

static void BM_Meet(benchmark::State& state) {
  Rng rng(3);
  const auto alg = TracialAlgebra::full(32);
  const auto e = random_projection(rng, alg, 0.7), f = random_projection(rng, alg, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(trace(meet(e, f)));
}
BENCHMARK(BM_Meet);

BENCHMARK_MAIN();
