#include <benchmark/benchmark.h>

#include <random>

#include "spinlift/clifford.hpp"
#include "spinlift/lift_oracle.hpp"

using namespace spinlift;

namespace {

Multivector dense_element(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Multivector m(dim);
  for (uint32_t blade = 0; blade < (1u << dim); ++blade) m.set_coeff(blade, coef(rng));
  return m;
}

}  // namespace

static void BM_GeometricProduct(benchmark::State& state) {
  int dim = static_cast<int>(state.range(0));
  Multivector a = dense_element(dim, 1);
  Multivector b = dense_element(dim, 2);
  for (auto _ : state) {
    Multivector c = a * b;
    benchmark::DoNotOptimize(c.scalar_part());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeometricProduct)->Arg(6)->Arg(8)->Arg(10);

static void BM_CandidateLift(benchmark::State& state) {
  OrthogonalRep rep = young_orthogonal_matrices(Partition{3, 1, 1});
  for (auto _ : state) {
    Multivector c = candidate_lift(rep.generators[0]);
    benchmark::DoNotOptimize(c.scalar_part());
  }
}
BENCHMARK(BM_CandidateLift);

static void BM_VerifySnLift(benchmark::State& state) {
  OrthogonalRep rep = young_orthogonal_matrices(Partition{3, 1, 1});
  for (auto _ : state) {
    LiftSearchResult r = verify_sn_lift(rep);
    benchmark::DoNotOptimize(r.exists);
  }
}
BENCHMARK(BM_VerifySnLift);

static void BM_YoungOrthogonalForm(benchmark::State& state) {
  Partition shape{4, 3, 2, 1};
  for (auto _ : state) {
    OrthogonalRep rep = young_orthogonal_matrices(shape);
    benchmark::DoNotOptimize(rep.degree);
  }
}
BENCHMARK(BM_YoungOrthogonalForm);

BENCHMARK_MAIN();
