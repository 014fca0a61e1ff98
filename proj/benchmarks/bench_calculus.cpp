#include <benchmark/benchmark.h>

#include <cmath>

#include "gls/calculus.hpp"
#include "gls/sup_search.hpp"

static void BM_SupSearchFinite(benchmark::State& state) {
  const gls::Interval dom(2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::sup_over_interval([](double p) { return -(p - 3) * (p - 3); }, dom));
  }
}
BENCHMARK(BM_SupSearchFinite);

static void BM_YoungFenchelSubgaussian(benchmark::State& state) {
  const auto psi = gls::GeneratingFunction::subgaussian();
  double u = 0.75;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gls::young_fenchel(psi, u));
    u = u < 3 ? u + 0.01 : 0.75;
  }
}
BENCHMARK(BM_YoungFenchelSubgaussian);

static void BM_GlsNormInterpolated(benchmark::State& state) {
  std::vector<gls::PNormCurve::Sample> s;
  for (int i = 0; i < 17; ++i) s.push_back({2.0 + i, std::pow(3.0, 1.0 / (2.0 + i))});
  const gls::PNormCurve curve(s);
  const auto psi = gls::GeneratingFunction::power(0.25, gls::Interval(2, 18));
  for (auto _ : state) benchmark::DoNotOptimize(gls::gls_norm(curve, psi));
}
BENCHMARK(BM_GlsNormInterpolated);
