#include <benchmark/benchmark.h>

#include "erosion_lab/erosion.hpp"
#include "erosion_lab/idla.hpp"
#include "erosion_lab/potential.hpp"
#include "erosion_lab/regions.hpp"
#include "erosion_lab/sorting.hpp"

namespace {

using namespace elab;

void BM_ErosionStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngSequence rng = RngStream{42, 0}.walker(0);
  Coloring coloring = make_initial(InitKind::kSlab, n, Rational(1, 3), rng);
  for (auto _ : state) {
    erosion_step_inplace(coloring, rng);
    benchmark::DoNotOptimize(coloring.blue_count());
  }
}
BENCHMARK(BM_ErosionStep)->Arg(10)->Arg(30)->Arg(64);

void BM_ExitHeightSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngSequence rng = RngStream{42, 1}.walker(0);
  Coloring coloring = make_initial(InitKind::kBernoulli, n, Rational(1, 3), rng, 0.33);
  auto regions = reach_regions(coloring);
  for (auto _ : state) {
    auto field = expected_exit_height(regions.r1, n);
    benchmark::DoNotOptimize(field.values.data());
  }
}
BENCHMARK(BM_ExitHeightSolve)->Arg(8)->Arg(16)->Arg(32);

void BM_IdlaParticles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RngSequence rng = RngStream{42, 2}.walker(0);
    auto cluster = idla_run(n, {}, 4 * n, rng);
    benchmark::DoNotOptimize(cluster.occupied_count());
  }
}
BENCHMARK(BM_IdlaParticles)->Arg(16)->Arg(50);

void BM_SortingStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngSequence rng = RngStream{42, 3}.walker(0);
  Labeling lab = Labeling::sorted(n);
  for (auto _ : state) {
    lab = sorting_step(lab, rng);
    benchmark::DoNotOptimize(lab.labels().data());
  }
}
BENCHMARK(BM_SortingStep)->Arg(10)->Arg(30);

void BM_BlockingDetector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RngSequence rng = RngStream{42, 4}.walker(0);
  Coloring coloring = make_initial(InitKind::kSlab, n, Rational(1, 3), rng);
  for (auto _ : state) {
    erosion_step_inplace(coloring, rng);
    benchmark::DoNotOptimize(detect_blue_over_red_blocking(coloring));
  }
}
BENCHMARK(BM_BlockingDetector)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
