#include <benchmark/benchmark.h>

#include "mombound/eigensolve.hpp"
#include "mombound/hierarchy.hpp"
#include "mombound/problems.hpp"

using namespace mombound;

static void BM_MomentMatrix(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    MomentSequence seq(MeasureSpec::exponential(2));
    benchmark::DoNotOptimize(localizing_matrix(seq, motzkin_like(), d));
  }
}
BENCHMARK(BM_MomentMatrix)->Arg(4)->Arg(8)->Arg(14);

static void BM_ExactLdlt(benchmark::State& state) {
  MomentSequence seq(MeasureSpec::exponential(2));
  RationalMatrix m = moment_matrix(seq, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ldlt(m));
}
BENCHMARK(BM_ExactLdlt)->Arg(4)->Arg(8)->Arg(14);

static void BM_Jacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(1);
  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = 2 * rng.uniform() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigensystem(a));
}
BENCHMARK(BM_Jacobi)->Arg(20)->Arg(60)->Arg(120);

static void BM_HierarchyLevel(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  MomentSequence seq(MeasureSpec::exponential(2));
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(motzkin_like(), seq, d));
}
BENCHMARK(BM_HierarchyLevel)->Arg(3)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_MaxCutLevel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Polynomial f = maxcut_equal(n).objective();
  MomentSequence seq(MeasureSpec::pm1_cube(n));
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(f, seq, 3));
}
BENCHMARK(BM_MaxCutLevel)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
