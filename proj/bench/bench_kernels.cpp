// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "poisson_zeta/kernels.hpp"
#include "poisson_zeta/oracle.hpp"
#include "poisson_zeta/smoothing.hpp"

using namespace poisson_zeta;
using kernels::Mode;

namespace {

Mode mode_of(const benchmark::State& state) { return state.range(0) == 0 ? Mode::kSerial : Mode::kParallel; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_InversePowerSum(benchmark::State& state) {
  const Complex s(4.0, 1.0, 128);
  const auto terms = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::inverse_power_sum(s, 1, terms, mode_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  set_label(state);
}
BENCHMARK(BM_InversePowerSum)->ArgsProduct({{0, 1}, {10'000, 100'000}})->Unit(benchmark::kMillisecond);

void BM_TruncatedFourier(benchmark::State& state) {
  const auto poly = smoothing::build_polynomial(SParameter(5.0, 1.0), 10);
  const auto terms = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::truncated_P(poly, terms, mode_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  set_label(state);
}
BENCHMARK(BM_TruncatedFourier)->ArgsProduct({{0, 1}, {1'000, 10'000}})->Unit(benchmark::kMillisecond);

void BM_HalfSum(benchmark::State& state) {
  const auto terms = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::half_sum_check(5, terms, 128, mode_of(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  set_label(state);
}
BENCHMARK(BM_HalfSum)->ArgsProduct({{0, 1}, {10'000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
