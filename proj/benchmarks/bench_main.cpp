#include <benchmark/benchmark.h>

#include "nilrig/cohomology.hpp"
#include "nilrig/families.hpp"
#include "nilrig/matrix.hpp"
#include "nilrig/operads.hpp"
#include "nilrig/random.hpp"
#include "nilrig/series.hpp"

namespace {

using namespace nilrig;

RationalMatrix random_matrix(std::size_t rows, std::size_t cols) {
  Rng rng(7);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.uniform(0, 3) == 0) m.set(i, j, Rational(rng.uniform(-9, 9)) / Rational(rng.uniform(1, 5)));
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = random_matrix(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(16)->Arg(32)->Arg(64);

void BM_ChevalleyDelta1Matrix(benchmark::State& state) {
  const LieAlgebra g = heisenberg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chevalley_delta1_matrix(g));
}
BENCHMARK(BM_ChevalleyDelta1Matrix)->Arg(2)->Arg(3)->Arg(4);

void BM_HeisenbergCH(benchmark::State& state) {
  const LieAlgebra g = heisenberg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(space_dims(g, ComplexKind::CH));
}
BENCHMARK(BM_HeisenbergCH)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_P01CR(benchmark::State& state) {
  const LieAlgebra g = g_p01(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(space_dims(g, ComplexKind::CR));
}
BENCHMARK(BM_P01CR)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SeriesCompose(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries a = gen_function(dims_2nilp(order), order);
  const TruncatedSeries b = gen_function(dual_dims_2nilp(order), order);
  for (auto _ : state) benchmark::DoNotOptimize(series_compose(a, b));
}
BENCHMARK(BM_SeriesCompose)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
