#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gls/calculus.hpp"
#include "gls/pnorm_curve.hpp"
#include "gls/quadrature.hpp"

namespace gls::manifold {

enum class HarmonicKind { Zonal, HighestWeight };

/// L^2-normalised spherical harmonic of degree k on the unit sphere, with
/// -Laplacian eigenvalue lambda^2 = k (k + 1).
///
/// Zonal:          c_k P_k(cos theta),  c_k = sqrt((2k + 1) / (4 pi)).
/// HighestWeight:  modulus c_k sin^k(theta),  c_k^2 * 2 pi * W(k) = 1,
/// where W(k) is the Wallis integral of sin^(2k+1) over [0, pi].
class SphereHarmonic {
 public:
  /// Throws Error{BadParams} for k < 1.
  SphereHarmonic(int degree, HarmonicKind kind);

  int degree() const noexcept { return k_; }
  HarmonicKind kind() const noexcept { return kind_; }
  double lambda() const noexcept;
  double norm_const() const noexcept { return norm_const_; }

  /// Signed value for Zonal, modulus for HighestWeight.
  double value(const SurfacePoint& point) const;
  double value_polar(double cos_theta, double sin_theta) const;
  /// ln |value|; -inf on nodal sets and at the poles for HighestWeight.
  double log_modulus_polar(double cos_theta, double sin_theta) const;

  double sup_norm() const noexcept { return norm_const_; }

 private:
  int k_;
  HarmonicKind kind_;
  double norm_const_;
};

/// Plane wave exp(i n.x) / (2 pi) on the flat torus [0, 2 pi)^2 with lambda = |n|.
/// Only the modulus, identically 1/(2 pi), is exposed.
class TorusWave {
 public:
  /// Throws Error{BadParams} for n = (0, 0).
  TorusWave(int n1, int n2);

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  double lambda() const noexcept;
  double value(const SurfacePoint&) const noexcept;
  double sup_norm() const noexcept;

 private:
  int n1_;
  int n2_;
};

using Eigenfunction = std::variant<SphereHarmonic, TorusWave>;

Manifold manifold_of(const Eigenfunction& e) noexcept;
double lambda_of(const Eigenfunction& e) noexcept;

/// Exact closed-form value (modulus for HighestWeight and TorusWave).
double eval_eigenfunction(const Eigenfunction& e, const SurfacePoint& point);

/// Closed-form max |e|.
double sup_norm(const Eigenfunction& e) noexcept;

/// Short label such as `zonal:8`, `hw:16` or `torus:3,4`.
std::string label(const Eigenfunction& e);

/// JSON descriptor `{"manifold": ..., "kind": ..., "k": ...}` or with `"n": [n1, n2]`.
std::string to_json(const Eigenfunction& e);
/// Throws Error{ParseError} on malformed descriptors.
Eigenfunction eigenfunction_from_json(const std::string& text);

/// W(m) = integral of sin^(2m+1) over [0, pi] via W(m) = W(m-1) 2m / (2m+1), W(0) = 2.
double wallis(int m);

/// P_k(x) by the three-term recurrence.
double legendre(int k, double x);

struct PNormOptions {
  double rel_tol = 1e-8;  ///< agreement required between successive doublings
  int max_order = 4096;   ///< cap on the Gauss-Legendre order being doubled
};

enum class GridScheme {
  Tensor,      ///< make_sphere_grid / make_torus_grid
  ZeroPanels,  ///< make_zero_panel_grid, for zonal harmonics at p not an even integer
};

struct GridSpec {
  Manifold manifold = Manifold::Sphere;
  GridScheme scheme = GridScheme::Tensor;
  int order = 0;   ///< doubled resolution parameter
  int degree = 0;  ///< panel split degree for ZeroPanels
};

QuadratureGrid make_grid(const GridSpec& spec);
/// Tensor grid of the given order on `m`.
QuadratureGrid make_grid(Manifold m, int order);

/// Scheme the adaptive p-norm uses for `e` over the finite p in `ps`.
/// |P_k|^p has kinks at the zeros of P_k unless p is an even integer, so
/// zonal harmonics switch to panels split at those zeros in that case.
GridScheme scheme_for(const Eigenfunction& e, std::span<const double> ps);

struct PNormResult {
  double value;
  GridSpec grid;  ///< grid of the returned value (order 0 for closed-form sup-norms)
};

/// (sum_i w_i |e(x_i)|^p)^(1/p) on a fixed grid, accumulated in log space.
/// Throws Error{BadParams} if the grid is on another manifold or p < 1.
double discrete_p_norm(const Eigenfunction& e, const QuadratureGrid& grid, double p);

/// ||e||_p with grid doubling until successive values agree to rel_tol.
/// p = +inf returns the closed-form sup-norm. Throws Error{NoConvergence}
/// when the cap is reached first.
PNormResult p_norm(const Eigenfunction& e, double p, const PNormOptions& options = {});

/// Finest grid any finite p in `ps` needs; every p has converged on it.
GridSpec converged_grid(const Eigenfunction& e, std::span<const double> ps,
                        const PNormOptions& options = {});

/// p-norm curve with all finite samples from one shared converged grid.
/// `ps` must be strictly increasing, each >= 1; a trailing +inf samples the
/// sup-norm.
PNormCurve p_norm_curve(const Eigenfunction& e, std::span<const double> ps,
                        const PNormOptions& options = {});

/// e evaluated at every node of `grid`, paired with the node weights.
WeightedSamples sample(const Eigenfunction& e, const QuadratureGrid& grid);

}  // namespace gls::manifold
