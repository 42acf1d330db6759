#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wpkit/observables.hpp"
#include "wpkit/quadrature.hpp"
#include "wpkit/rotation.hpp"
#include "wpkit/sampling.hpp"
#include "wpkit/wavepacket.hpp"

namespace {

wpkit::GaussianParams squeezed() {
  return wpkit::GaussianParams::validate({1.0, 0.0}, {1.0, 1.0}, 1.0);
}

void BM_ExcitedState(benchmark::State& state) {
  const auto p = squeezed();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpkit::excited_state(p, k));
  }
}
BENCHMARK(BM_ExcitedState)->RangeMultiplier(2)->Range(1, 64);

void BM_EvaluateGrid(benchmark::State& state) {
  const auto wp = wpkit::excited_state(squeezed(), 10);
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -10.0 + 20.0 * i / (xs.size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpkit::evaluate(wp, xs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateGrid)->Range(256, 1 << 14);

void BM_QuadratureVariance(benchmark::State& state) {
  const auto p = squeezed();
  const int k = static_cast<int>(state.range(0));
  const auto wp = wpkit::excited_state(p, k);
  const auto spec = wpkit::default_quadrature(p, k);
  const auto obs = wpkit::LinearObservable::momentum();
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpkit::quadrature_expectation(wp, obs, spec));
  }
}
BENCHMARK(BM_QuadratureVariance)->Arg(0)->Arg(4)->Arg(8);

void BM_LadderVariance(benchmark::State& state) {
  const auto wp = wpkit::excited_state(squeezed(), 8);
  const auto obs = wpkit::LinearObservable::alpha(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpkit::variance(obs, wp));
  }
}
BENCHMARK(BM_LadderVariance);

void BM_ScanMinimize(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto p = wpkit::random_params(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpkit::scan_minimize(p, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ScanMinimize)->Arg(1024)->Arg(8192);

}  // namespace

BENCHMARK_MAIN();
