#include <benchmark/benchmark.h>

#include "webgram/gtduality.hpp"
#include "webgram/tldiagrams.hpp"

using namespace webgram;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_GramExponents(benchmark::State& state) {
  const int a = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gram_exponents(a, 2, mode(state)));
  label(state);
}
BENCHMARK(BM_GramExponents)->ArgsProduct({{0, 1}, {10, 12}})->Unit(benchmark::kMillisecond);

void BM_DetDeltaPowers(benchmark::State& state) {
  const ExponentMatrix e = gram_exponents(static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(det_delta_powers(e, mode(state)));
  label(state);
}
BENCHMARK(BM_DetDeltaPowers)->ArgsProduct({{0, 1}, {8, 10}, {2}})->Unit(benchmark::kMillisecond);

// Generic fraction-free elimination over Laurent polynomials on the same input.
void BM_DetBareiss(benchmark::State& state) {
  const PolyMatrix m = gram_matrix(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_DetBareiss)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const TLElement jw = jones_wenzl(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(jw, jw, mode(state)));
  label(state);
}
BENCHMARK(BM_Multiply)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_MultiplyReference(benchmark::State& state) {
  const TLElement jw = jones_wenzl(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_reference(jw, jw));
}
BENCHMARK(BM_MultiplyReference)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GTSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gt_sweep(8, 4, mode(state)));
  label(state);
}
BENCHMARK(BM_GTSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
