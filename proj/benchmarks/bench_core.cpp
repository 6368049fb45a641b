#include <benchmark/benchmark.h>

#include "udw/correlators.hpp"
#include "udw/dynamics.hpp"
#include "udw/resources.hpp"
#include "udw/sweep.hpp"

namespace {

// arg 0: scenario index (1 parallel, 2 antiparallel, 3 perpendicular), arg 1: 10 * a
void BM_CorrelatorSet(benchmark::State& state) {
  const auto scenario = static_cast<udw::Scenario>(state.range(0));
  const udw::TrajectoryParams t{static_cast<double>(state.range(1)) / 10.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(udw::correlator_set(scenario, t, {}, {}));
}
BENCHMARK(BM_CorrelatorSet)
    ->ArgsProduct({{1, 2, 3}, {0, 20}})
    ->Unit(benchmark::kMillisecond);

udw::CorrelatorSet sample_correlators() {
  static const udw::CorrelatorSet c = udw::correlator_set(udw::Scenario::Parallel, {1.0, 0.5}, {}, {});
  return c;
}

void BM_FinalState(benchmark::State& state) {
  const udw::CorrelatorSet c = sample_correlators();
  const udw::InitialState init{udw::InitialKind::ZeroT, {}};
  for (auto _ : state) benchmark::DoNotOptimize(udw::final_state(init, c));
}
BENCHMARK(BM_FinalState);

void BM_NonlocalSre(benchmark::State& state) {
  const udw::DensityMatrix rho = udw::final_state({udw::InitialKind::BellPhiPlus, {}}, sample_correlators());
  udw::NonlocalOptions opt;
  opt.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udw::nonlocal_sre(rho, opt));
}
BENCHMARK(BM_NonlocalSre)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ResourceReport(benchmark::State& state) {
  const udw::DensityMatrix rho = udw::final_state({udw::InitialKind::ZeroZero, {}}, sample_correlators());
  for (auto _ : state) benchmark::DoNotOptimize(udw::resource_report(rho, {}));
}
BENCHMARK(BM_ResourceReport)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
