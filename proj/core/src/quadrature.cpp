#include "gls/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls::manifold {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNewtonTol = 1e-15;
constexpr int kNewtonMaxIter = 100;

// P_n(x) and P_{n-1}(x) by upward recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p_prev = 1.0;
  double p = x;
  if (n == 0) return {1.0, 0.0};
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0) * x * p - j * p_prev) / (j + 1.0);
    p_prev = p;
    p = next;
  }
  return {p, p_prev};
}

std::shared_ptr<const LegendreRule> compute_rule(int n) {
  auto rule = std::make_shared<LegendreRule>();
  rule->nodes.assign(n, 0.0);
  rule->weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      auto [p, p_prev] = legendre_pair(n, x);
      derivative = n * (x * p - p_prev) / (x * x - 1.0);
      const double dx = p / derivative;
      x -= dx;
      if (std::abs(dx) <= kNewtonTol) break;
    }
    auto [p, p_prev] = legendre_pair(n, x);
    derivative = n * (x * p - p_prev) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x) * (1.0 + x) * derivative * derivative);
    // i counts down from the largest root.
    rule->nodes[n - 1 - i] = x;
    rule->nodes[i] = -x;
    rule->weights[n - 1 - i] = w;
    rule->weights[i] = w;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

std::string_view manifold_name(Manifold m) noexcept {
  return m == Manifold::Sphere ? "sphere" : "torus";
}

std::shared_ptr<const LegendreRule> gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::BadResolution, "Gauss-Legendre order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LegendreRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto rule = compute_rule(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(rule)).first->second;
}

void QuadratureGrid::finish(int azimuths) {
  const std::size_t rings = ring_cos_.size();
  ring_coords_.resize(rings);
  ring_sin_.resize(rings);
  node_weights_.resize(rings);
  for (std::size_t j = 0; j < rings; ++j) {
    const double x = ring_cos_[j];
    ring_coords_[j] = std::acos(x);
    ring_sin_[j] = std::sqrt((1.0 - x) * (1.0 + x));
    node_weights_[j] = ring_weights_[j] / azimuths;
  }
  second_.resize(azimuths);
  for (int m = 0; m < azimuths; ++m) second_[m] = 2.0 * kPi * m / azimuths;
  double sum = 0.0;
  double comp = 0.0;
  for (double w : ring_weights_) {
    const double y = w - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  total_ = sum;
}

QuadratureGrid make_sphere_grid(int n) {
  if (n < 2) throw Error(ErrorCode::BadResolution, "sphere grid order must be >= 2");
  const auto rule = gauss_legendre(n);
  QuadratureGrid g;
  g.manifold_ = Manifold::Sphere;
  g.order_ = n;
  g.ring_cos_ = rule->nodes;
  g.ring_weights_.resize(n);
  for (int j = 0; j < n; ++j) g.ring_weights_[j] = 2.0 * kPi * rule->weights[j];
  g.descriptor_ = "sphere:N=" + std::to_string(n);
  g.finish(2 * n);
  return g;
}

QuadratureGrid make_zero_panel_grid(int degree, int order) {
  if (degree < 1 || order < 1) {
    throw Error(ErrorCode::BadResolution, "panel grid needs degree >= 1 and order >= 1");
  }
  const auto zeros = gauss_legendre(degree);
  const auto rule = gauss_legendre(order);
  std::vector<double> breaks;
  breaks.reserve(degree + 2);
  breaks.push_back(-1.0);
  breaks.insert(breaks.end(), zeros->nodes.begin(), zeros->nodes.end());
  breaks.push_back(1.0);

  QuadratureGrid g;
  g.manifold_ = Manifold::Sphere;
  g.order_ = order;
  g.ring_cos_.reserve(static_cast<std::size_t>(degree + 1) * order);
  g.ring_weights_.reserve(g.ring_cos_.capacity());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double mid = 0.5 * (breaks[i + 1] + breaks[i]);
    const double half = 0.5 * (breaks[i + 1] - breaks[i]);
    for (int j = 0; j < order; ++j) {
      g.ring_cos_.push_back(mid + half * rule->nodes[j]);
      g.ring_weights_.push_back(2.0 * kPi * half * rule->weights[j]);
    }
  }
  g.descriptor_ = "sphere-panels:k=" + std::to_string(degree) + ",N=" + std::to_string(order);
  g.finish(2 * (degree + 1));
  return g;
}

QuadratureGrid make_torus_grid(int m) {
  if (m < 1) throw Error(ErrorCode::BadResolution, "torus grid order must be >= 1");
  QuadratureGrid g;
  g.manifold_ = Manifold::Torus;
  g.order_ = m;
  const double h = 2.0 * kPi / m;
  g.ring_coords_.resize(m);
  g.ring_cos_.resize(m);
  g.ring_sin_.resize(m);
  g.ring_weights_.assign(m, h * 2.0 * kPi);
  g.node_weights_.assign(m, h * h);
  g.second_.resize(m);
  for (int i = 0; i < m; ++i) {
    g.ring_coords_[i] = h * i;
    g.ring_cos_[i] = std::cos(h * i);
    g.ring_sin_[i] = std::sin(h * i);
    g.second_[i] = h * i;
  }
  double sum = 0.0;
  for (double w : g.ring_weights_) sum += w;
  g.total_ = sum;
  g.descriptor_ = "torus:N=" + std::to_string(m);
  return g;
}

SurfacePoint QuadratureGrid::node(std::size_t i) const {
  const std::size_t per_ring = second_.size();
  return {ring_coords_.at(i / per_ring), second_[i % per_ring]};
}

double QuadratureGrid::weight(std::size_t i) const {
  return node_weights_.at(i / second_.size());
}

std::string QuadratureGrid::descriptor() const { return descriptor_; }

void QuadratureGrid::write_csv(std::ostream& out) const {
  out << (manifold_ == Manifold::Sphere ? "theta,phi,weight\n" : "x,y,weight\n");
  for (std::size_t i = 0; i < size(); ++i) {
    const auto pt = node(i);
    out << format_real(pt.u, 17) << ',' << format_real(pt.v, 17) << ',' << format_real(weight(i), 17)
        << '\n';
  }
}

}  // namespace gls::manifold
