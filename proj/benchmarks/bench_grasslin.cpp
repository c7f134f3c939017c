#include <benchmark/benchmark.h>

#include "grasslin/chern/engine.hpp"
#include "grasslin/solver/classify.hpp"

using namespace grasslin;

static void BM_Mul2Stable(benchmark::State& state) {
  const auto amb = Ambient::stable();
  const SchubertClass x = SchubertClass::cycle(amb, {8, 5});
  const SchubertClass y = SchubertClass::cycle(amb, {7, 3});
  for (auto _ : state) benchmark::DoNotOptimize(mul2(x, y));
}
BENCHMARK(BM_Mul2Stable);

static void BM_PowerOfHyperplane(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SchubertClass h = SchubertClass::cycle(Ambient::of(m), {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(pow(h, static_cast<unsigned>(2 * m - 4)));
}
BENCHMARK(BM_PowerOfHyperplane)->Arg(8)->Arg(12)->Arg(16);

static void BM_NormalSeriesSymbolic(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const EmbeddingContext ctx(m, m + 2);
  for (auto _ : state) benchmark::DoNotOptimize(cn_total(ctx));
}
BENCHMARK(BM_NormalSeriesSymbolic)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_NormalSeriesEvaluated(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const EmbeddingContext ctx(m, m + 2);
  const auto data = evaluated_data({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(cn_total(ctx, data));
}
BENCHMARK(BM_NormalSeriesEvaluated)->Arg(6)->Arg(9)->Arg(12)->Arg(14)->Unit(benchmark::kMicrosecond);

static void BM_CheckTriple(benchmark::State& state) {
  const ConstraintSystem system = build_system(EmbeddingContext(12, 15));
  for (auto _ : state) benchmark::DoNotOptimize(check_triple(system, {1, 0, 1}));
}
BENCHMARK(BM_CheckTriple)->Unit(benchmark::kMicrosecond);

static void BM_Enumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ConstraintSystem system = build_system(EmbeddingContext(m, m + 1));
  const Box box = Box::defaults(m);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(system, box));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
