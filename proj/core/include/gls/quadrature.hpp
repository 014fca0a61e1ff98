#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gls::manifold {

enum class Manifold { Sphere, Torus };

std::string_view manifold_name(Manifold m) noexcept;

/// Point on a model surface: (colatitude theta, azimuth phi) on the unit
/// sphere, or (x, y) in [0, 2 pi)^2 on the flat torus.
struct SurfacePoint {
  double u;
  double v;
};

/// Gauss-Legendre rule on [-1, 1], nodes ascending.
struct LegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on P_n with the three-term recurrence, iterated until the
/// update is below 1e-15. Rules are memoised; the returned rule is shared and
/// immutable. Throws Error{BadResolution} for n < 1.
std::shared_ptr<const LegendreRule> gauss_legendre(int n);

/// Tensor-product quadrature on a model surface.
///
/// Sphere: Gauss-Legendre in cos(theta) of order N times 2N uniform azimuths,
/// exact for spherical polynomials of degree <= 2N - 1. Torus: M x M uniform
/// nodes (periodic trapezoid rule). Nodes are grouped in rings of constant
/// first coordinate; `ring_weights()` carries each ring's weight integrated
/// over the second coordinate, which is all that functions whose modulus
/// ignores the second coordinate need.
class QuadratureGrid {
 public:
  Manifold manifold() const noexcept { return manifold_; }
  /// N for the sphere, M for the torus.
  int order() const noexcept { return order_; }

  std::size_t size() const noexcept { return ring_coords_.size() * second_.size(); }
  SurfacePoint node(std::size_t i) const;
  double weight(std::size_t i) const;
  /// Sum of all weights, 4 pi or 4 pi^2 up to rounding.
  double total() const noexcept { return total_; }

  std::span<const double> ring_coords() const noexcept { return ring_coords_; }
  std::span<const double> ring_cos() const noexcept { return ring_cos_; }
  std::span<const double> ring_sin() const noexcept { return ring_sin_; }
  std::span<const double> ring_weights() const noexcept { return ring_weights_; }
  std::span<const double> second_coords() const noexcept { return second_; }

  std::string descriptor() const;

  /// `theta,phi,weight` or `x,y,weight`, 17 significant digits.
  void write_csv(std::ostream& out) const;

  friend QuadratureGrid make_sphere_grid(int n);
  friend QuadratureGrid make_zero_panel_grid(int degree, int order);
  friend QuadratureGrid make_torus_grid(int m);

 private:
  QuadratureGrid() = default;

  Manifold manifold_ = Manifold::Sphere;
  int order_ = 0;
  std::vector<double> ring_coords_;
  std::vector<double> ring_cos_;
  std::vector<double> ring_sin_;
  std::vector<double> ring_weights_;
  std::vector<double> node_weights_;  // per ring, weight of a single node
  std::vector<double> second_;
  double total_ = 0.0;
  std::string descriptor_;

  void finish(int azimuths);
};

/// Throws Error{BadResolution} for n < 2.
QuadratureGrid make_sphere_grid(int n);
/// Sphere rule for functions of cos(theta) with kinks at the zeros of P_degree:
/// [-1, 1] is split at those zeros (the order-`degree` Gauss-Legendre nodes)
/// and each of the degree + 1 panels gets an `order`-point Gauss-Legendre
/// rule. Azimuths: 2 * (degree + 1). Throws Error{BadResolution} for
/// degree < 1 or order < 1.
QuadratureGrid make_zero_panel_grid(int degree, int order);
/// Throws Error{BadResolution} for m < 1.
QuadratureGrid make_torus_grid(int m);

}  // namespace gls::manifold
