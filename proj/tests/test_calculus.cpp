#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gls/calculus.hpp"
#include "gls/eigenfunctions.hpp"
#include "gls/error.hpp"
#include "oracles.hpp"

using gls::GeneratingFunction;
using gls::Interval;
using gls::kInf;
using gls::PNormCurve;

namespace {

PNormCurve power_curve(double A, double B, const std::vector<double>& ps) {
  std::vector<PNormCurve::Sample> s;
  for (double p : ps) s.push_back({p, A * std::pow(B, 1.0 / p)});
  return PNormCurve(std::move(s));
}

gls::WeightedSamples constant_on_sphere(double value, int n = 16) {
  const auto grid = gls::manifold::make_sphere_grid(n);
  gls::WeightedSamples f;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    f.values.push_back(value);
    f.weights.push_back(grid.weight(i));
  }
  return f;
}

}  // namespace

TEST(PNormCurve, ValidationAndInterpolation) {
  EXPECT_THROW(PNormCurve({{2, 1}, {2, 1}}), gls::Error);
  EXPECT_THROW(PNormCurve({{2, 1}, {3, -1}}), gls::Error);
  EXPECT_THROW(PNormCurve({{kInf, 1}, {3, 1}}), gls::Error);
  EXPECT_NO_THROW(PNormCurve({{2, 1}, {kInf, 3}}));
  // Exact for A B^(1/p).
  const auto c = power_curve(2, 5, {2, 4, 8, 16});
  for (double p : {2.5, 3.0, 6.0, 12.0}) EXPECT_NEAR(c.value_at(p), 2 * std::pow(5, 1 / p), 1e-13);
  EXPECT_EQ(c.value_at(4), 2 * std::pow(5, 0.25));
}

TEST(PNormCurve, CsvRoundTrip) {
  const PNormCurve c({{2, 1}, {4, 0.7071067811865476}, {kInf, 1.2}});
  std::stringstream s;
  c.write_csv(s);
  const auto back = PNormCurve::read_csv(s);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back.samples()[i].p, c.samples()[i].p);
    EXPECT_EQ(back.samples()[i].norm, c.samples()[i].norm);
  }
}

TEST(GlsNorm, ExtremalIsCurveValue) {
  const auto c = power_curve(1.3, 0.2, {2, 3, 4, 5, 6});
  const auto psi = GeneratingFunction::extremal(4, Interval(2, 6));
  EXPECT_EQ(gls::gls_norm(c, psi).value, c.value_at(4));
}

TEST(GlsNorm, ConstantRatio) {
  const PNormCurve c({{2, 1}, {6, 1}});
  EXPECT_NEAR(gls::gls_norm(c, GeneratingFunction::constant(1, Interval(2, 6))).value, 1.0, 1e-15);
}

TEST(GlsNorm, DomainMismatch) {
  const PNormCurve c({{2, 1}, {5, 1}});
  try {
    gls::gls_norm(c, GeneratingFunction::constant(1, Interval(2, 6)));
    FAIL();
  } catch (const gls::Error& e) {
    EXPECT_EQ(e.code(), gls::ErrorCode::DomainMismatch);
  }
}

TEST(GlsNorm, ZonalLargePIsSupNorm) {
  using namespace gls::manifold;
  const Eigenfunction e = SphereHarmonic(32, HarmonicKind::Zonal);
  const std::vector<double> ps{6, 6 * std::sqrt(2.0), 12, 12 * std::sqrt(2.0), 24, 48, 96, kInf};
  const auto curve = p_norm_curve(e, ps);
  double brute = 0.0;
  for (const auto& s : curve.samples()) brute = std::max(brute, s.norm);
  const auto r = gls::gls_norm(curve, GeneratingFunction::constant(1, Interval(6, kInf)));
  EXPECT_NEAR(r.value, brute, 1e-12 * brute);
  EXPECT_NEAR(r.value, oracle::zonal_norm_const(32), 1e-12);
  EXPECT_FALSE(r.attained);
}

TEST(Fundamental, ConstantPsiEndpoint) {
  const auto psi = GeneratingFunction::constant(1, Interval(2, 6));
  const auto r = gls::fundamental_function(psi, 0.01);
  const double brute = oracle::brute_sup([](double p) { return std::pow(0.01, 1 / p); }, 2, 6, 1'000'000, true);
  EXPECT_NEAR(brute, 0.464158883361278, 1e-12);
  EXPECT_NEAR(r.value, 0.464158883361278, 1e-12);
  EXPECT_FALSE(r.attained);
  EXPECT_EQ(r.arg, 6.0);
}

TEST(Fundamental, DeltaOneIsReciprocalInfimum) {
  const double alpha = 0.7;
  const auto psi = GeneratingFunction::power(alpha, Interval(3, 9));
  EXPECT_NEAR(gls::fundamental_function(psi, 1.0).value, 1 / std::pow(3, alpha), 1e-12);
}

TEST(Fundamental, SubgaussianStationaryPoint) {
  const auto psi = GeneratingFunction::subgaussian();
  const auto r = gls::fundamental_function(psi, std::exp(-1.0));
  const double brute = oracle::brute_sup([](double p) { return std::exp(-1 / p - 0.5 * std::log(p)); }, 1, kInf);
  const double closed = std::exp(-0.5) / std::sqrt(2.0);
  EXPECT_NEAR(brute, closed, 1e-9);
  EXPECT_NEAR(r.value, closed, 1e-12);
  EXPECT_NEAR(r.arg, 2.0, 1e-5);
}

TEST(Fundamental, LogFormAgrees) {
  const auto psi = GeneratingFunction::power(0.5, Interval(2, 40));
  for (double delta : {1e-6, 0.3, 1.0, 7.0}) {
    EXPECT_NEAR(gls::log_fundamental_function(psi, delta).value, std::log(gls::fundamental_function(psi, delta).value),
                1e-13);
    EXPECT_NEAR(gls::log_fundamental_function_at_log(psi, std::log(delta)).value,
                gls::log_fundamental_function(psi, delta).value, 1e-13);
  }
}

TEST(YoungFenchel, Examples) {
  const auto sg = GeneratingFunction::subgaussian();
  EXPECT_NEAR(gls::young_fenchel(sg, 1).value, std::numbers::e / 2, 1e-12);
  const auto c = GeneratingFunction::constant(1, Interval(2, 6));
  const auto up = gls::young_fenchel(c, 1);
  EXPECT_NEAR(up.value, 6, 1e-12);
  EXPECT_FALSE(up.attained);
  const auto down = gls::young_fenchel(c, -1);
  EXPECT_NEAR(down.value, -2, 1e-12);
  EXPECT_EQ(down.arg, 2.0);
  // u < 1/2 for sqrt(p) on (1, inf): the sup sits at p -> 1.
  EXPECT_NEAR(gls::young_fenchel(sg, 0.25).value, 0.25, 1e-12);
  // Constant psi on (2, inf) with u > ln c diverges.
  const auto div = gls::young_fenchel(GeneratingFunction::constant(1, Interval(2, kInf)), 0.1);
  EXPECT_TRUE(std::isinf(div.value));
}

TEST(YoungFenchel, ExtremalIsLinear) {
  const auto psi = GeneratingFunction::extremal(5, Interval(2, 8));
  EXPECT_EQ(gls::young_fenchel(psi, 1.5).value, 7.5);
}

TEST(TailBound, Examples) {
  const auto c = GeneratingFunction::constant(1, Interval(2, 6));
  EXPECT_NEAR(gls::tail_bound(c, 1, 1), 1.0, 1e-15);
  const auto sg = GeneratingFunction::subgaussian();
  EXPECT_NEAR(gls::tail_bound(sg, 1, std::numbers::e), std::exp(-std::numbers::e / 2), 1e-12);
  const auto r = GeneratingFunction::extremal(4, Interval(2, 6));
  EXPECT_NEAR(gls::tail_bound(r, 0.8, 2.0), std::pow(0.4, 4), 1e-15);
  EXPECT_NEAR(gls::tail_bound(c, 1, 1.5), std::pow(2.0 / 3.0, 6), 1e-12);
  EXPECT_THROW(gls::tail_bound(c, 0, 1), gls::Error);
}

TEST(TailBound, LiteralForm) {
  const auto sg = GeneratingFunction::subgaussian();
  // exp(-h(u)) with u = e / 1.
  const double h = 0.5 * std::exp(2 * std::numbers::e - 1);
  EXPECT_NEAR(gls::tail_bound(sg, 1, std::numbers::e, gls::TailBoundForm::Literal), std::exp(-h), 1e-15);
}

TEST(EmpiricalTail, ConstantFunction) {
  const auto f = constant_on_sphere(0.5);
  const std::vector<double> us{0.25, 1.0};
  const auto t = gls::empirical_tail(f, us);
  EXPECT_NEAR(t.points()[0].tail, 4 * std::numbers::pi, 1e-12);
  EXPECT_EQ(t.points()[1].tail, 0.0);
  EXPECT_THROW(gls::empirical_tail(gls::WeightedSamples{}, us), gls::Error);
}

TEST(EmpiricalTail, ZonalPolarCaps) {
  using namespace gls::manifold;
  const Eigenfunction e = SphereHarmonic(8, HarmonicKind::Zonal);
  const auto grid = make_sphere_grid(64);
  const auto f = sample(e, grid);
  const double u = 0.9 * sup_norm(e);
  double brute = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = grid.node(i);
    if (std::abs(oracle::zonal_norm_const(8) * oracle::legendre_std(8, std::cos(x.u))) > u) brute += grid.weight(i);
  }
  const std::vector<double> us{u};
  const double got = gls::empirical_tail(f, us).points()[0].tail;
  EXPECT_GT(got, 0.0);
  EXPECT_LT(got, 0.2);
  EXPECT_NEAR(got, brute, 1e-13);
}

TEST(MomentGenerating, Examples) {
  EXPECT_NEAR(gls::moment_generating(constant_on_sphere(0.0), 7), 4 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(gls::moment_generating(constant_on_sphere(0.37), 0), 4 * std::numbers::pi, 1e-12);
  using namespace gls::manifold;
  const Eigenfunction e = SphereHarmonic(4, HarmonicKind::Zonal);
  const double coarse = gls::moment_generating(sample(e, make_sphere_grid(32)), 1);
  const double fine = gls::moment_generating(sample(e, make_sphere_grid(64)), 1);
  EXPECT_LE(oracle::rel_err(coarse, fine), 1e-8);
}

TEST(MomentGenerating, ShiftAndOverflow) {
  // A max-shift keeps ln nu finite where exp(z f) alone would overflow.
  const auto f = constant_on_sphere(1000.0);
  EXPECT_NEAR(gls::log_moment_generating(f, 1), 1000 + std::log(4 * std::numbers::pi), 1e-9);
  try {
    gls::moment_generating(f, 1);
    FAIL();
  } catch (const gls::Error& e) {
    EXPECT_EQ(e.code(), gls::ErrorCode::Overflow);
  }
}

TEST(TailCurve, CsvAndValidation) {
  EXPECT_THROW(gls::TailCurve({{1, 0.5, NAN}, {2, 0.7, NAN}}), gls::Error);
  const gls::TailCurve t({{1, 0.5, 1.0}, {2, 0.25, 0.5}});
  std::ostringstream s;
  t.write_csv(s);
  EXPECT_EQ(s.str(), "u,T,bound\n1,0.5,1\n2,0.25,0.5\n");
}

// ---- properties -----------------------------------------------------------

TEST(CalculusProperty, ExtremalIdentity) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ps = gen.increasing(gen.integer(3, 12), 1.0, 30.0);
    std::vector<PNormCurve::Sample> s;
    for (double p : ps) s.push_back({p, gen.log_uniform(1e-3, 1e3)});
    const PNormCurve curve(s);
    for (int j = 0; j < 5; ++j) {
      const double r = gen.uniform(ps.front(), ps.back());
      const auto psi = GeneratingFunction::extremal(r, Interval(std::max(1.0, ps.front()), ps.back()));
      ASSERT_LE(oracle::rel_err(gls::gls_norm(curve, psi).value, curve.value_at(r)), 1e-12);
    }
  }
}

TEST(CalculusProperty, HomogeneityAndMonotonicity) {
  oracle::Gen gen(32);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = gen.uniform(1, 4), b = a + gen.uniform(1, 20);
    const auto curve = power_curve(gen.log_uniform(0.1, 10), gen.log_uniform(1e-3, 1e3), {a, (a + b) / 2, b});
    const Interval dom(a, b);
    const auto psi1 = GeneratingFunction::power(gen.uniform(0, 1), dom);
    const auto psi2 = GeneratingFunction::power(gen.uniform(1, 2), dom);  // psi2 >= psi1 since p > 1
    const double c = gen.log_uniform(1e-3, 1e3);
    const double n1 = gls::gls_norm(curve, psi1).value;
    ASSERT_LE(oracle::rel_err(gls::gls_norm(curve.scaled(c), psi1).value, c * n1), 1e-12);
    ASSERT_GE(n1, gls::gls_norm(curve, psi2).value * (1 - 1e-12));
  }
}

TEST(CalculusProperty, FundamentalMonotoneAndConstantClosedForm) {
  oracle::Gen gen(33);
  for (int trial = 0; trial < 30; ++trial) {
    const double a = gen.uniform(1, 5), b = a + gen.uniform(0.5, 30);
    const double c = gen.log_uniform(0.1, 10);
    const auto psi = GeneratingFunction::constant(c, Interval(a, b));
    double prev = 0.0;
    for (double ld = -20; ld <= 20; ld += 0.5) {
      const double delta = std::exp(ld);
      const double v = gls::fundamental_function(psi, delta).value;
      ASSERT_GE(v, prev * (1 - 1e-12));
      prev = v;
      const double closed = std::max(std::pow(delta, 1 / a), std::pow(delta, 1 / b)) / c;
      ASSERT_LE(oracle::rel_err(v, closed), 1e-12) << "delta " << delta;
    }
  }
}

TEST(CalculusProperty, ConjugateConvexNonDecreasing) {
  oracle::Gen gen(34);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = gen.uniform(1, 3);
    const Interval dom(a, a + gen.uniform(1, 30));
    std::vector<GeneratingFunction> psis{GeneratingFunction::constant(gen.log_uniform(0.5, 2), dom),
                                         GeneratingFunction::power(gen.uniform(0, 2), dom),
                                         GeneratingFunction::subgaussian(dom), GeneratingFunction::subgaussian()};
    for (const auto& psi : psis) {
      std::vector<double> h;
      for (int i = 0; i <= 40; ++i) h.push_back(gls::young_fenchel(psi, -1 + 0.1 * i).value);
      for (std::size_t i = 1; i + 1 < h.size(); ++i) {
        if (!std::isfinite(h[i + 1])) break;
        ASSERT_GE(h[i], h[i - 1] - 1e-12 * std::abs(h[i])) << psi.id();
        ASSERT_LE(h[i], 0.5 * (h[i - 1] + h[i + 1]) + 1e-9 * (1 + std::abs(h[i]))) << psi.id();
      }
    }
  }
}

TEST(CalculusProperty, ChebyshevConsistency) {
  using namespace gls::manifold;
  const auto psi = GeneratingFunction::subgaussian(Interval(2, 12));
  for (int k : {3, 6, 12}) {
    for (HarmonicKind kind : {HarmonicKind::Zonal, HarmonicKind::HighestWeight}) {
      const Eigenfunction e = SphereHarmonic(k, kind);
      const std::vector<double> ps{2, 3, 4, 6, 8, 10, 12};
      const auto grid = make_grid(converged_grid(e, ps));
      const auto curve = p_norm_curve(e, ps);
      const double g = gls::gls_norm(curve, psi).value;
      std::vector<double> us;
      for (int i = 1; i <= 30; ++i) us.push_back(g * (1 + 0.1 * i));
      const auto tail = gls::empirical_tail(sample(e, grid), us);
      for (const auto& pt : tail.points()) {
        ASSERT_LE(pt.tail, gls::tail_bound(psi, g, pt.u) * (1 + 1e-6)) << label(e) << " u=" << pt.u;
      }
    }
  }
}
