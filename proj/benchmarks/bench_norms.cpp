#include <benchmark/benchmark.h>

#include <memory>

#include "qmfree/asymmetrize.hpp"
#include "qmfree/freespace.hpp"
#include "qmfree/polytope.hpp"
#include "qmfree/sampling.hpp"

namespace {

using namespace qmf;

void BM_DualNorm(benchmark::State& state) {
  Rng rng(1729);
  const int n = static_cast<int>(state.range(0));
  auto space = std::make_shared<const QuasiMetricSpace>(random_space(rng, n));
  Molecule q = random_molecule(rng, space, n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_norm(q));
  }
}
BENCHMARK(BM_DualNorm)->Arg(4)->Arg(6)->Arg(8);

void BM_KrNorm(benchmark::State& state) {
  Rng rng(1729);
  const int n = static_cast<int>(state.range(0));
  auto space = std::make_shared<const QuasiMetricSpace>(random_space(rng, n));
  Molecule q = random_molecule(rng, space, n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kr_norm(q));
  }
}
BENCHMARK(BM_KrNorm)->Arg(4)->Arg(6)->Arg(8);

void BM_CanonicalAsym(benchmark::State& state) {
  Rng rng(7);
  const int n = static_cast<int>(state.range(0));
  QuasiMetricSpace metric = random_metric_space(rng, n);
  ConeSpec cone = ConeSpec::nonneg();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_asym(metric, cone));
  }
}
BENCHMARK(BM_CanonicalAsym)->Arg(4)->Arg(6)->Arg(8);

void BM_FreeBallVertices(benchmark::State& state) {
  Rng rng(11);
  QuasiMetricSpace space = random_space(rng, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_ball_vrep(space));
  }
}
BENCHMARK(BM_FreeBallVertices);

}  // namespace

BENCHMARK_MAIN();
