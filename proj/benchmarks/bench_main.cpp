#include <benchmark/benchmark.h>

#include "skein/qtorus.hpp"
#include "skein/rational_function.hpp"
#include "skein/skein_t2.hpp"
#include "skein/torus3.hpp"

using namespace skein;

static void BM_FgProductCurves(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const SkeinT2Element x = make_curve(n, n - 1);
  const SkeinT2Element y = make_curve(-n + 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(fg_product(x, y));
}
BENCHMARK(BM_FgProductCurves)->Arg(3)->Arg(50)->Arg(1000);

static void BM_FgProductSums(benchmark::State& state) {
  SkeinT2Element x, y;
  for (std::int64_t k = 1; k <= state.range(0); ++k) {
    x += RationalFunction::var_power(k) * make_curve(k, 1);
    y += make_curve(1, k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fg_product(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FgProductSums)->RangeMultiplier(2)->Range(2, 32)->Complexity();

static void BM_ChebyshevT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chebyshev_T(state.range(0), 2, 3));
}
BENCHMARK(BM_ChebyshevT)->Arg(4)->Arg(16)->Arg(64);

static void BM_QtMul(benchmark::State& state) {
  const QTorusElement x = embed_curve(3, 5) + embed_curve(1, -2);
  const QTorusElement y = embed_curve(-4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(qt_mul(x, y));
}
BENCHMARK(BM_QtMul);

static void BM_RationalAdd(benchmark::State& state) {
  const RationalFunction a = RationalFunction::quantum_difference(3).inverse();
  const RationalFunction b = RationalFunction::quantum_difference(5).inverse();
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalAdd);

static void BM_RationalMulLaurent(benchmark::State& state) {
  const RationalFunction a = RationalFunction::var_power(7) - RationalFunction::var_power(-3);
  const RationalFunction b = RationalFunction::var_power(2) + 5;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalMulLaurent);

static void BM_ReducePqr(benchmark::State& state) {
  const Curve3 c(1234567, 7654321, 99991);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_pqr(c));
}
BENCHMARK(BM_ReducePqr);

static void BM_FindDiffeo(benchmark::State& state) {
  const Curve3 c(1234567, 7654321, 99991);
  for (auto _ : state) benchmark::DoNotOptimize(find_diffeo(c));
}
BENCHMARK(BM_FindDiffeo);
BENCHMARK_MAIN();
