#include <benchmark/benchmark.h>

#include "gls/eigenfunctions.hpp"
#include "gls/quadrature.hpp"

namespace mf = gls::manifold;

static void BM_GaussLegendreUncached(benchmark::State& state) {
  // Odd offsets defeat the memo cache for all but the first iteration's size.
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::gauss_legendre(n));
    state.PauseTiming();
    n += 2;
    state.ResumeTiming();
  }
}
BENCHMARK(BM_GaussLegendreUncached)->Arg(64)->Arg(512)->Arg(2048)->Iterations(20);

static void BM_DiscretePNorm(benchmark::State& state) {
  const mf::Eigenfunction e = mf::SphereHarmonic(static_cast<int>(state.range(0)), mf::HarmonicKind::Zonal);
  const auto grid = mf::make_sphere_grid(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mf::discrete_p_norm(e, grid, 10.0));
}
BENCHMARK(BM_DiscretePNorm)->Args({32, 256})->Args({128, 1024});

static void BM_AdaptivePNorm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::p_norm(mf::SphereHarmonic(k, mf::HarmonicKind::Zonal), 3.0));
    benchmark::DoNotOptimize(mf::p_norm(mf::SphereHarmonic(k, mf::HarmonicKind::HighestWeight), 4.0));
  }
}
BENCHMARK(BM_AdaptivePNorm)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
