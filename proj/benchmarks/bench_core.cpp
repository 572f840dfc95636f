#include <vector>

#include <benchmark/benchmark.h>

#include "tripow/oracle.hpp"
#include "tripow/power_function.hpp"
#include "tripow/random.hpp"
#include "tripow/shooting.hpp"
#include "tripow/thresholds.hpp"

namespace {

std::vector<tripow::TriplePower> instances(int count) {
  tripow::SplitMix64 rng(1);
  std::vector<tripow::TriplePower> out;
  for (int i = 0; i < count; ++i) out.push_back(tripow::random_triple(rng));
  return out;
}

void BM_Classify(benchmark::State& state) {
  const auto fs = instances(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tripow::classify(fs[i++ & 1023]));
}
BENCHMARK(BM_Classify);

void BM_Tilde(benchmark::State& state) {
  const auto fs = instances(1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tripow::tilde(fs[i++ & 1023]));
}
BENCHMARK(BM_Tilde);

void BM_TildeFiniteDifference(benchmark::State& state) {
  const auto fs = instances(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = fs[i++ & 1023];
    benchmark::DoNotOptimize(tripow::oracle::tilde_fd(f, tripow::turning_point(f)));
  }
}
BENCHMARK(BM_TildeFiniteDifference);

void BM_ScanClassify(benchmark::State& state) {
  const auto fs = instances(64);
  const tripow::oracle::ScanConfig cfg{.points = static_cast<int>(state.range(0))};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tripow::oracle::scan_classify(fs[i++ & 63], cfg));
}
BENCHMARK(BM_ScanClassify)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_FindRoots(benchmark::State& state) {
  const auto fs = instances(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tripow::oracle::find_roots(fs[i++ & 63]));
}
BENCHMARK(BM_FindRoots);

void BM_Integrate(benchmark::State& state) {
  const auto cfg = tripow::shooting::make_config(tripow::DoublePower(0.1, 3, 5), 3);
  for (auto _ : state) benchmark::DoNotOptimize(tripow::shooting::shoot(cfg, 0.9));
}
BENCHMARK(BM_Integrate)->Unit(benchmark::kMicrosecond);

void BM_FindGroundState(benchmark::State& state) {
  const auto cfg = tripow::shooting::make_config(
      tripow::DoublePower(0.1, 3, 5), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tripow::shooting::find_ground_state(cfg));
}
BENCHMARK(BM_FindGroundState)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
