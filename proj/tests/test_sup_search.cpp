#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gls/error.hpp"
#include "gls/sup_search.hpp"
#include "oracles.hpp"

using gls::Interval;
using gls::kInf;
using gls::sup_over_interval;

TEST(SupSearch, InteriorQuadratic) {
  const auto r = sup_over_interval([](double p) { return -(p - 3) * (p - 3); }, Interval(2, 6));
  EXPECT_NEAR(r.value, 0.0, 1e-15);
  EXPECT_NEAR(r.arg, 3.0, 1e-6);
  EXPECT_TRUE(r.attained);
  EXPECT_TRUE(r.converged);
}

TEST(SupSearch, DecreasingOnUnboundedDomain) {
  const auto r = sup_over_interval([](double p) { return 1.0 / p; }, Interval(2, kInf));
  EXPECT_NEAR(r.value, 0.5, 1e-14);
  EXPECT_EQ(r.arg, 2.0);
  EXPECT_FALSE(r.attained);
}

TEST(SupSearch, IncreasingToFiniteEnd) {
  const auto r = sup_over_interval([](double p) { return p; }, Interval(2, 6));
  EXPECT_NEAR(r.value, 6.0, 1e-13);
  EXPECT_EQ(r.arg, 6.0);
  EXPECT_FALSE(r.attained);
}

TEST(SupSearch, SubgaussianConjugateStationaryPoint) {
  auto f = [](double p) { return p * 1.0 - p * 0.5 * std::log(p); };
  const auto r = sup_over_interval(f, Interval(1, kInf));
  const double brute = oracle::brute_sup(f, 1, kInf);
  EXPECT_NEAR(brute, std::numbers::e / 2, 1e-9);
  EXPECT_NEAR(r.value, std::numbers::e / 2, 1e-12);
  EXPECT_NEAR(r.arg, std::numbers::e, 1e-5);
}

TEST(SupSearch, DivergenceAtInfinity) {
  const auto r = sup_over_interval([](double p) { return p; }, Interval(2, kInf));
  EXPECT_TRUE(std::isinf(r.value));
  EXPECT_TRUE(std::isinf(r.arg));
  EXPECT_FALSE(r.attained);
}

TEST(SupSearch, BoundedLimitAtInfinityIsNotDivergence) {
  const auto r = sup_over_interval([](double p) { return 1.0 - 1.0 / p; }, Interval(2, kInf));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_TRUE(std::isinf(r.arg));
  EXPECT_FALSE(r.attained);
}

TEST(SupSearch, Errors) {
  try {
    sup_over_interval([](double) { return NAN; }, Interval(2, 6));
    FAIL();
  } catch (const gls::Error& e) {
    EXPECT_EQ(e.code(), gls::ErrorCode::NonFiniteObjective);
  }
  try {
    sup_over_interval([](double p) { return p; }, Interval(2, std::nextafter(2.0, 3.0)));
    FAIL();
  } catch (const gls::Error& e) {
    EXPECT_EQ(e.code(), gls::ErrorCode::EmptyInterior);
  }
  EXPECT_THROW(sup_over_interval([](double p) { return p; }, Interval(2, 3), 0.0), gls::Error);
}

TEST(SupSearch, ConvergedBracketIsNarrow) {
  gls::SupSearchOptions o;
  o.tol = 1e-10;
  const auto r = sup_over_interval([](double p) { return -std::pow(std::log(p) - 1.3, 2); }, Interval(2, 9), o);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(std::log(r.arg), 1.3, 1e-5);
}

TEST(SupSearchProperty, ConcaveObjectivesMatchBruteForce) {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = gen.uniform(1, 4);
    const double b = a + gen.log_uniform(0.5, 40);
    const double c = gen.uniform(a - 1, b + 1);
    const double s = gen.log_uniform(0.01, 10);
    const double t = gen.uniform(-2, 2);
    // Concave in p: -s (p - c)^2 + t p, or -s e^{p/b} + t p.
    auto quad = [=](double p) { return -s * (p - c) * (p - c) + t * p; };
    auto expo = [=](double p) { return -s * std::exp(p / b) + t * p; };
    for (const auto& f : {std::function<double(double)>(quad), std::function<double(double)>(expo)}) {
      const auto r = sup_over_interval(f, Interval(a, b));
      const double brute = oracle::brute_sup(f, a, b, 1'000'000, true);
      ASSERT_NEAR(r.value, brute, 1e-8) << "trial " << trial;
    }
  }
}
