#include "orthoglide/synthesis.hpp"
#include "orthoglide/workspace.hpp"

#include <benchmark/benchmark.h>

using namespace orthoglide;

static void BM_Synthesize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(200.0, Bounds{0.5, 2.0}));
}
BENCHMARK(BM_Synthesize);

static void BM_VerifyCube(benchmark::State& state) {
  const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  const DesignParams d = to_design(s);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cube(d, s.cube, s.bounds, n));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_VerifyCube)->Arg(11)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

static void BM_DiagonalProfile(benchmark::State& state) {
  const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  const DesignParams d = to_design(s);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_profile(d, s.q1[0], s.q2[0], 1001));
}
BENCHMARK(BM_DiagonalProfile);
