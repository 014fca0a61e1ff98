#include "gls/eigenfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls::manifold {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinOrder = 16;
constexpr int kMinPanelOrder = 8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_p(double p) {
  if (std::isnan(p) || p < 1.0) throw Error(ErrorCode::BadParams, "p-norm needs p >= 1, got " + format_real(p, 17));
}

int next_pow2(long long n) {
  int out = 1;
  while (out < n) out *= 2;
  return out;
}

bool even_integer(double p) { return std::isfinite(p) && std::fmod(p, 2.0) == 0.0; }

// Starting order. On tensor grids this is exact for even integer p, where
// |e|^p is a polynomial of degree k p; panels start small since each panel
// integrand is smooth.
int initial_order(const Eigenfunction& e, const GridSpec& spec, double p, int cap) {
  if (spec.manifold == Manifold::Torus) return kMinOrder;
  if (spec.scheme == GridScheme::ZeroPanels) return std::max(2, std::min(kMinPanelOrder, cap / 2));
  const auto& h = std::get<SphereHarmonic>(e);
  const long long wanted = static_cast<long long>(h.degree()) * static_cast<long long>(std::ceil(p)) / 2 + 1;
  return std::max(2, std::min(next_pow2(std::max<long long>(kMinOrder, wanted)), cap / 2));
}

GridSpec spec_for(const Eigenfunction& e, GridScheme scheme, int order) {
  GridSpec spec;
  spec.manifold = manifold_of(e);
  spec.scheme = scheme;
  spec.order = order;
  if (scheme == GridScheme::ZeroPanels) spec.degree = std::get<SphereHarmonic>(e).degree();
  return spec;
}

PNormResult adaptive_norm(const Eigenfunction& e, GridScheme scheme, double p, const PNormOptions& options) {
  GridSpec spec = spec_for(e, scheme, 0);
  spec.order = initial_order(e, spec, p, options.max_order);
  double previous = discrete_p_norm(e, make_grid(spec), p);
  while (2 * spec.order <= options.max_order) {
    spec.order *= 2;
    const double current = discrete_p_norm(e, make_grid(spec), p);
    if (std::abs(current - previous) <= options.rel_tol * std::abs(current)) return {current, spec};
    previous = current;
  }
  throw Error(ErrorCode::NoConvergence, "p-norm of " + label(e) + " at p = " + format_real(p, 12) +
                                            " did not converge by order " +
                                            std::to_string(options.max_order));
}

}  // namespace

double wallis(int m) {
  if (m < 0) throw Error(ErrorCode::BadParams, "Wallis index must be >= 0");
  double w = 2.0;
  for (int j = 1; j <= m; ++j) w *= (2.0 * j) / (2.0 * j + 1.0);
  return w;
}

double legendre(int k, double x) {
  if (k == 0) return 1.0;
  double p_prev = 1.0;
  double p = x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0) * x * p - j * p_prev) / (j + 1.0);
    p_prev = p;
    p = next;
  }
  return p;
}

SphereHarmonic::SphereHarmonic(int degree, HarmonicKind kind) : k_(degree), kind_(kind) {
  if (degree < 1) throw Error(ErrorCode::BadParams, "spherical harmonic degree must be >= 1");
  if (kind == HarmonicKind::Zonal) {
    norm_const_ = std::sqrt((2.0 * k_ + 1.0) / (4.0 * kPi));
  } else {
    norm_const_ = 1.0 / std::sqrt(2.0 * kPi * wallis(k_));
  }
}

double SphereHarmonic::lambda() const noexcept {
  return std::sqrt(static_cast<double>(k_) * (k_ + 1.0));
}

double SphereHarmonic::value_polar(double cos_theta, double sin_theta) const {
  if (kind_ == HarmonicKind::Zonal) return norm_const_ * legendre(k_, cos_theta);
  return std::exp(log_modulus_polar(cos_theta, sin_theta));
}

double SphereHarmonic::log_modulus_polar(double cos_theta, double sin_theta) const {
  if (kind_ == HarmonicKind::Zonal) {
    return std::log(norm_const_) + std::log(std::abs(legendre(k_, cos_theta)));
  }
  // sin^k in log space; log(0) = -inf maps to a zero modulus.
  return std::log(norm_const_) + k_ * std::log(std::abs(sin_theta));
}

double SphereHarmonic::value(const SurfacePoint& point) const {
  return value_polar(std::cos(point.u), std::sin(point.u));
}

TorusWave::TorusWave(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 == 0 && n2 == 0) throw Error(ErrorCode::BadParams, "torus frequency must be nonzero");
}

double TorusWave::lambda() const noexcept { return std::hypot(double(n1_), double(n2_)); }
double TorusWave::value(const SurfacePoint&) const noexcept { return 1.0 / (2.0 * kPi); }
double TorusWave::sup_norm() const noexcept { return 1.0 / (2.0 * kPi); }

Manifold manifold_of(const Eigenfunction& e) noexcept {
  return std::holds_alternative<SphereHarmonic>(e) ? Manifold::Sphere : Manifold::Torus;
}

double lambda_of(const Eigenfunction& e) noexcept {
  return std::visit([](const auto& f) { return f.lambda(); }, e);
}

double eval_eigenfunction(const Eigenfunction& e, const SurfacePoint& point) {
  return std::visit([&](const auto& f) { return f.value(point); }, e);
}

double sup_norm(const Eigenfunction& e) noexcept {
  return std::visit([](const auto& f) { return f.sup_norm(); }, e);
}

std::string label(const Eigenfunction& e) {
  return std::visit(Overloaded{
                        [](const SphereHarmonic& h) {
                          return std::string(h.kind() == HarmonicKind::Zonal ? "zonal:" : "hw:") +
                                 std::to_string(h.degree());
                        },
                        [](const TorusWave& t) {
                          return "torus:" + std::to_string(t.n1()) + "," + std::to_string(t.n2());
                        },
                    },
                    e);
}

std::string to_json(const Eigenfunction& e) {
  nlohmann::ordered_json j;
  std::visit(Overloaded{
                 [&](const SphereHarmonic& h) {
                   j["manifold"] = "sphere";
                   j["kind"] = h.kind() == HarmonicKind::Zonal ? "zonal" : "highest_weight";
                   j["k"] = h.degree();
                 },
                 [&](const TorusWave& t) {
                   j["manifold"] = "torus";
                   j["kind"] = "wave";
                   j["n"] = {t.n1(), t.n2()};
                 },
             },
             e);
  return j.dump();
}

Eigenfunction eigenfunction_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto manifold = j.at("manifold").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (manifold == "sphere") {
      const int k = j.at("k").get<int>();
      if (kind == "zonal") return SphereHarmonic(k, HarmonicKind::Zonal);
      if (kind == "highest_weight") return SphereHarmonic(k, HarmonicKind::HighestWeight);
    } else if (manifold == "torus" && kind == "wave") {
      const auto& n = j.at("n");
      if (n.size() != 2) throw Error(ErrorCode::ParseError, "torus frequency needs two entries");
      return TorusWave(n[0].get<int>(), n[1].get<int>());
    }
    throw Error(ErrorCode::ParseError, "unknown eigenfunction descriptor: " + text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad eigenfunction descriptor: ") + ex.what());
  }
}

QuadratureGrid make_grid(Manifold m, int order) {
  return m == Manifold::Sphere ? make_sphere_grid(order) : make_torus_grid(order);
}

QuadratureGrid make_grid(const GridSpec& spec) {
  if (spec.manifold == Manifold::Sphere && spec.scheme == GridScheme::ZeroPanels) {
    return make_zero_panel_grid(spec.degree, spec.order);
  }
  return make_grid(spec.manifold, spec.order);
}

GridScheme scheme_for(const Eigenfunction& e, std::span<const double> ps) {
  const auto* h = std::get_if<SphereHarmonic>(&e);
  if (h == nullptr || h->kind() != HarmonicKind::Zonal) return GridScheme::Tensor;
  const bool all_even = std::all_of(ps.begin(), ps.end(), [](double p) { return std::isinf(p) || even_integer(p); });
  return all_even ? GridScheme::Tensor : GridScheme::ZeroPanels;
}

double discrete_p_norm(const Eigenfunction& e, const QuadratureGrid& grid, double p) {
  check_p(p);
  if (std::isinf(p)) throw Error(ErrorCode::BadParams, "discrete p-norm needs finite p");
  if (grid.manifold() != manifold_of(e)) {
    throw Error(ErrorCode::BadParams, "eigenfunction and grid live on different manifolds");
  }
  const auto cosines = grid.ring_cos();
  const auto sines = grid.ring_sin();
  const auto weights = grid.ring_weights();
  std::vector<double> logs(weights.size());
  for (std::size_t j = 0; j < logs.size(); ++j) {
    logs[j] = std::visit(Overloaded{
                             [&](const SphereHarmonic& h) { return h.log_modulus_polar(cosines[j], sines[j]); },
                             [](const TorusWave&) { return -std::log(2.0 * kPi); },
                         },
                         e) *
              p;
  }
  const double shift = *std::max_element(logs.begin(), logs.end());
  if (shift == -INFINITY) return 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t j = 0; j < logs.size(); ++j) {
    const double y = weights[j] * std::exp(logs[j] - shift) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return std::exp((shift + std::log(sum)) / p);
}

PNormResult p_norm(const Eigenfunction& e, double p, const PNormOptions& options) {
  check_p(p);
  if (std::isinf(p)) return {sup_norm(e), spec_for(e, GridScheme::Tensor, 0)};
  const double ps[] = {p};
  return adaptive_norm(e, scheme_for(e, ps), p, options);
}

GridSpec converged_grid(const Eigenfunction& e, std::span<const double> ps, const PNormOptions& options) {
  const GridScheme scheme = scheme_for(e, ps);
  GridSpec spec = spec_for(e, scheme, manifold_of(e) == Manifold::Sphere ? 2 : 1);
  for (double p : ps) {
    check_p(p);
    if (std::isinf(p)) continue;
    spec.order = std::max(spec.order, adaptive_norm(e, scheme, p, options).grid.order);
  }
  return spec;
}

PNormCurve p_norm_curve(const Eigenfunction& e, std::span<const double> ps, const PNormOptions& options) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    check_p(ps[i]);
    if (i > 0 && !(ps[i - 1] < ps[i])) throw Error(ErrorCode::BadParams, "p values must be strictly increasing");
  }
  const auto grid = make_grid(converged_grid(e, ps, options));
  std::vector<PNormCurve::Sample> samples;
  samples.reserve(ps.size());
  for (double p : ps) {
    samples.push_back({p, std::isinf(p) ? sup_norm(e) : discrete_p_norm(e, grid, p)});
  }
  return PNormCurve(std::move(samples), label(e) + "@" + grid.descriptor());
}

WeightedSamples sample(const Eigenfunction& e, const QuadratureGrid& grid) {
  if (grid.manifold() != manifold_of(e)) {
    throw Error(ErrorCode::BadParams, "eigenfunction and grid live on different manifolds");
  }
  WeightedSamples out;
  out.values.reserve(grid.size());
  out.weights.reserve(grid.size());
  const std::size_t per_ring = grid.second_coords().size();
  for (std::size_t j = 0; j < grid.ring_coords().size(); ++j) {
    // Every implemented family is independent of the second coordinate.
    const double v = std::visit(Overloaded{
                                    [&](const SphereHarmonic& h) {
                                      return h.value_polar(grid.ring_cos()[j], grid.ring_sin()[j]);
                                    },
                                    [](const TorusWave& t) { return t.sup_norm(); },
                                },
                                e);
    for (std::size_t m = 0; m < per_ring; ++m) {
      out.values.push_back(v);
      out.weights.push_back(grid.weight(j * per_ring + m));
    }
  }
  return out;
}

}  // namespace gls::manifold
