#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "facloc/audit.hpp"
#include "facloc/instances.hpp"
#include "facloc/mechanism.hpp"
#include "facloc/optimal.hpp"

namespace {

facloc::Instance sized_instance(int n, std::uint64_t seed) {
  facloc::GeneratorConfig config;
  config.n_min = n;
  config.n_max = n;
  config.location_max = facloc::Rational(100);
  return facloc::random_instance(config, seed);
}

std::vector<std::pair<facloc::Rational, facloc::Weight>> sized_points(
    int n, std::uint64_t seed) {
  facloc::Instance instance = sized_instance(n, seed);
  std::vector<std::pair<facloc::Rational, facloc::Weight>> points;
  for (const auto& a : instance.agents()) {
    points.emplace_back(a.location, a.weight);
  }
  return points;
}

void BM_WeightedMedian(benchmark::State& state) {
  auto points = sized_points(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facloc::weighted_median(points));
  }
}
BENCHMARK(BM_WeightedMedian)->Arg(10)->Arg(100)->Arg(1000);

void BM_OptimalHomogeneousPair(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facloc::optimal_homogeneous_pair(instance));
  }
}
BENCHMARK(BM_OptimalHomogeneousPair)->Arg(10)->Arg(100)->Arg(1000);

void BM_OptimalHeterogeneous(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facloc::optimal_heterogeneous(instance));
  }
}
BENCHMARK(BM_OptimalHeterogeneous)->Arg(10)->Arg(100)->Arg(1000);

void BM_KMedian(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(facloc::optimal_homogeneous_k(instance, 3));
  }
}
BENCHMARK(BM_KMedian)->Arg(10)->Arg(100);

void BM_MechanismApply(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 23);
  facloc::MechanismOne mech;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mech.apply(instance));
  }
}
BENCHMARK(BM_MechanismApply)->Arg(10)->Arg(100);

// The audit's hot path: candidates fixed, selection re-run per misreport.
void BM_MechanismSelect(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 29);
  facloc::MechanismOne mech;
  std::vector<facloc::Rational> candidates = mech.candidates(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mech.select(instance, candidates));
  }
}
BENCHMARK(BM_MechanismSelect)->Arg(10)->Arg(100);

void BM_CheckStrategyproof(benchmark::State& state) {
  facloc::Instance instance =
      sized_instance(static_cast<int>(state.range(0)), 31);
  facloc::MechanismOne mech;
  for (auto _ : state) {
    benchmark::DoNotOptimize(facloc::check_strategyproof(
        instance, mech, facloc::DeviatorMode::kWholeWeight));
  }
}
BENCHMARK(BM_CheckStrategyproof)->Arg(5)->Arg(10);

void BM_RatioSweep(benchmark::State& state) {
  facloc::GeneratorConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        facloc::ratio_sweep(config, static_cast<std::uint64_t>(state.range(0)), 7));
  }
}
BENCHMARK(BM_RatioSweep)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
