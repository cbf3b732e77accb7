#include <benchmark/benchmark.h>

#include "spinlift/characters.hpp"
#include "spinlift/spinoriality.hpp"

using namespace spinlift;

static void BM_HookDimension(benchmark::State& state) {
  Partition shape{8, 6, 5, 4, 3, 2, 1, 1};
  for (auto _ : state) {
    BigInt d = shape.dimension();
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_HookDimension);

static void BM_BorderStripCharacter(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Partition shape = [&] {
    std::vector<int> parts;
    for (int p = n; p > 0; p -= 2) parts.push_back(p);  // staircase-ish shape
    return Partition(parts);
  }();
  CycleType cycles = CycleType::padded(Partition{2, 2}, shape.size());
  for (auto _ : state) {
    BigInt v = character_value(shape, cycles);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_BorderStripCharacter)->Arg(6)->Arg(10)->Arg(14);

static void BM_SkewCount(benchmark::State& state) {
  Partition outer{10, 8, 6, 4, 2};
  Partition inner{3, 1};
  for (auto _ : state) {
    BigInt v = skew_syt_count(outer, inner);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_SkewCount);

static void BM_DensitySweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DensityPoint p = density_sweep(n);
    benchmark::DoNotOptimize(p.achiral_spinorial);
  }
}
BENCHMARK(BM_DensitySweep)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
