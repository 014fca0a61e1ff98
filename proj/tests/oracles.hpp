#pragma once

// Independent reference computations. Nothing here calls into the library's
// numerics, so agreement is a real cross-check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Dense uniform grid maximum. For b = inf the grid is uniform in s = 1/p.
// `closed` also evaluates the finite endpoints, for objectives continuous there.
inline double brute_sup(const std::function<double(double)>& f, double a, double b, int n = 1'000'000,
                        bool closed = false) {
  double best = -std::numeric_limits<double>::infinity();
  if (std::isinf(b)) {
    const double s_hi = 1.0 / a;
    for (int i = 1; i < (closed ? n + 1 : n); ++i) {
      const double s = s_hi * i / n;
      best = std::max(best, f(1.0 / s));
    }
  } else {
    for (int i = closed ? 0 : 1; i < (closed ? n + 1 : n); ++i) best = std::max(best, f(a + (b - a) * i / n));
  }
  return best;
}

// Dense grid uniform in ln p over [a, min(b, a * window)], endpoints included,
// plus the p -> inf limit f(inf) when b is infinite. The window keeps the grid
// spacing fine enough near interior maximisers at moderate p.
inline double brute_sup_log(const std::function<double(double)>& f, double a, double b, int n = 1'000'000,
                            double window = 1e4) {
  const double hi = std::min(b, a * window);
  const double la = std::log(a), lh = std::log(hi);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    double p = std::exp(la + (lh - la) * i / n);
    p = std::clamp(p, a, hi);
    best = std::max(best, f(p));
  }
  if (std::isinf(b)) best = std::max(best, f(b));
  return best;
}

// W(m) = integral_0^pi sin^(2m+1), by W(m) = W(m-1) 2m / (2m+1), W(0) = 2.
inline double wallis_recursive(int m) {
  double w = 2.0;
  for (int j = 1; j <= m; ++j) w *= 2.0 * j / (2.0 * j + 1.0);
  return w;
}

// ||Y_k^k||_p for even integer p: (c^p 2 pi W(kp/2))^(1/p), c^2 2 pi W(k) = 1.
inline double hw_p_norm_wallis(int k, int p) {
  const double log_c = -0.5 * std::log(2.0 * kPi * wallis_recursive(k));
  return std::exp(log_c + (std::log(2.0 * kPi) + std::log(wallis_recursive(k * p / 2))) / p);
}

// integral_0^pi sin^n(theta) d theta = sqrt(pi) Gamma((n+1)/2) / Gamma(n/2 + 1), any real n > -1.
inline double sine_power_integral(double n) {
  return std::exp(0.5 * std::log(kPi) + std::lgamma((n + 1.0) / 2.0) - std::lgamma(n / 2.0 + 1.0));
}

// Highest-weight harmonic of degree k: |Y| = c sin^k, c^2 2 pi int sin^(2k+1) = 1.
inline double hw_norm_const(int k) { return 1.0 / std::sqrt(2.0 * kPi * sine_power_integral(2.0 * k + 1.0)); }

// ||Y_k^k||_p = (c^p 2 pi int sin^(kp+1))^(1/p), evaluated in log space.
inline double hw_p_norm(int k, double p) {
  const double log_int = std::log(2.0 * kPi) + 0.5 * std::log(kPi) + std::lgamma((k * p + 2.0) / 2.0) -
                         std::lgamma((k * p + 3.0) / 2.0);
  return hw_norm_const(k) * std::exp(log_int / p);
}

inline double zonal_norm_const(int k) { return std::sqrt((2.0 * k + 1.0) / (4.0 * kPi)); }

// Legendre polynomial from the standard library's special functions.
inline double legendre_std(int k, double x) { return std::legendre(static_cast<unsigned>(k), x); }

// Zonal p-norm by composite Simpson on theta, for cross-checks at modest k.
inline double zonal_p_norm_simpson(int k, double p, int panels = 200'000) {
  const double c = zonal_norm_const(k);
  const double h = kPi / panels;
  double acc = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::pow(std::abs(c * legendre_std(k, std::cos(t))), p) * std::sin(t);
  }
  return std::pow(2.0 * kPi * acc * h / 3.0, 1.0 / p);
}

// Laplace-Beltrami on S^2 for a function of colatitude: f'' + cot(theta) f',
// by symmetric second-order differences.
inline double laplace_beltrami_theta(const std::function<double(double)>& f, double theta, double h) {
  const double fp = f(theta + h);
  const double fm = f(theta - h);
  const double f0 = f(theta);
  return (fp - 2.0 * f0 + fm) / (h * h) + std::cos(theta) / std::sin(theta) * (fp - fm) / (2.0 * h);
}

// Ordinary least squares slope on (ln x, ln y), written out directly.
inline double loglog_slope(const std::vector<std::pair<double, double>>& xy) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xy.size());
  for (auto [x, y] : xy) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Fixed-seed generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eed'2024'abcdULL) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Sorted distinct values in (lo, hi).
  std::vector<double> increasing(int n, double lo, double hi) {
    std::vector<double> v;
    while (static_cast<int>(v.size()) < n) {
      v.push_back(uniform(lo, hi));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
