#include <benchmark/benchmark.h>

#include "vregion/extremal.hpp"
#include "vregion/oracle.hpp"
#include "vregion/region.hpp"

namespace {

using namespace vregion;

const CanonicalParams kMixed{2.0 / 3.0, 1.0 / 3.0};

void BM_SolveRTheta(benchmark::State& state) {
  // Sweep the direction so both dichotomy branches are exercised.
  double theta = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_r_theta(kMixed, theta));
    theta = theta >= 3.0 ? -3.0 : theta + 1e-3;
  }
}
BENCHMARK(BM_SolveRTheta);

void BM_BoundaryPolyline(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary_polyline(kMixed, samples));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_BoundaryPolyline)->Arg(256)->Arg(2048);

void BM_ExtremalJet(benchmark::State& state) {
  const ExtremalSpec spec = build_extremal(kMixed, 0.3);
  const Complex z{0.5, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_jet(spec, z));
  }
}
BENCHMARK(BM_ExtremalJet);

void BM_SampleRegion(benchmark::State& state) {
  const int rings = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_region(kMixed, rings, rings, 16));
  }
  state.SetItemsProcessed(state.iterations() * rings * rings * 16);
}
BENCHMARK(BM_SampleRegion)->Arg(30)->Arg(100);

void BM_SupportCheck(benchmark::State& state) {
  const SampleCloud cloud = sample_region(kMixed, 50, 50, 16);
  const RegionPolyline boundary = boundary_polyline(kMixed, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(support_check(cloud, boundary, 1e-9));
  }
}
BENCHMARK(BM_SupportCheck);

void BM_ClassifyGammaCurve(benchmark::State& state) {
  double s = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_gamma_curve(s));
    s = s >= 0.9 ? 0.05 : s + 0.01;
  }
}
BENCHMARK(BM_ClassifyGammaCurve);

}  // namespace

BENCHMARK_MAIN();
