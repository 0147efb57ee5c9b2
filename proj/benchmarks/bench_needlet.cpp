#include <benchmark/benchmark.h>

#include "needlet/coeffs.hpp"
#include "needlet/field.hpp"
#include "needlet/report.hpp"
#include "needlet/rng.hpp"
#include "needlet/variance.hpp"

using namespace needlet;

namespace {

const PowerSpectrum kSpectrum = PowerSpectrum::power_law(4.0);

void BM_Synthesize(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(static_cast<int>(state.range(0)));
  RandomStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(kSpectrum, scale.l_max(), rng));
  state.SetComplexityN(static_cast<long>(scale.N));
}
BENCHMARK(BM_Synthesize)->DenseRange(6, 14, 2)->Complexity();

void BM_BetaFromSpectrum(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(static_cast<int>(state.range(0)));
  RandomStream rng(2);
  const auto f = synthesize(kSpectrum, scale.l_max(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(beta_from_spectrum(f.w, scale));
  state.SetComplexityN(static_cast<long>(scale.N));
}
BENCHMARK(BM_BetaFromSpectrum)->DenseRange(6, 14, 2)->Complexity();

void BM_BetaDiscrete(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(8);
  RandomStream rng(3);
  const auto g = evaluate_grid(synthesize(kSpectrum, 4 * state.range(0), rng), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(beta_discrete(g, scale));
}
BENCHMARK(BM_BetaDiscrete)->RangeMultiplier(4)->Range(1024, 65536);

void BM_VarTheoretical(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(var_theoretical(kSpectrum, scale));
  state.SetComplexityN(static_cast<long>(scale.N));
}
BENCHMARK(BM_VarTheoretical)->DenseRange(4, 14, 2)->Complexity();

void BM_VarEstimated(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(static_cast<int>(state.range(0)));
  RandomStream rng(4);
  const auto u = weighted_periodogram(synthesize(kSpectrum, scale.l_max(), rng).w, scale);
  for (auto _ : state) benchmark::DoNotOptimize(var_estimated(u, scale));
  state.SetComplexityN(static_cast<long>(scale.N));
}
BENCHMARK(BM_VarEstimated)->DenseRange(4, 14, 2)->Complexity();

void BM_StudentizedTest(benchmark::State& state) {
  const auto scale = NeedletScale::from_level(10);
  RandomStream rng(5);
  const auto beta = beta_from_spectrum(synthesize(kSpectrum, scale.l_max(), rng).w, scale);
  for (auto _ : state) benchmark::DoNotOptimize(test_studentized(beta, scale));
}
BENCHMARK(BM_StudentizedTest);

}  // namespace

BENCHMARK_MAIN();
