#pragma once

#include "gls/psi.hpp"
#include "gls/sup_search.hpp"

namespace gls::sogge {

/// Dimension-dependent exponent data of the eigenfunction L^p estimate
///   ||e_lambda||_p <= C lambda^mu(p),  p > 2,
/// with critical exponent p_c = 2(d+1)/(d-1) separating the two branches of mu.
class ExponentProfile {
 public:
  /// Throws Error{BadParams} for d < 2.
  explicit ExponentProfile(int dimension);

  int dimension() const noexcept { return d_; }
  double critical_exponent() const noexcept { return p_c_; }

  /// (d-1)/2 * (1/2 - 1/p), the branch used on (2, p_c].
  double mu_small(double p) const noexcept;
  /// d (1/2 - 1/p) - 1/2, the branch used on [p_c, inf].
  double mu_large(double p) const noexcept;

 private:
  int d_;
  double p_c_;
};

/// Piecewise exponent; p = +inf gives (d-1)/2. Throws Error{OutOfRange} for p <= 2.
double mu(const ExponentProfile& profile, double p);

/// Exponent of lambda in the source estimate at p; same value as mu.
inline double source_bound_exponent(const ExponentProfile& profile, double p) {
  return mu(profile, p);
}

/// Small-p bound lambda^((d-1)/4) * phi(lambda^((1-d)/2)) with the manifold
/// constant set to 1. Requires the psi domain inside (2, p_c], else
/// Error{DomainViolation}.
double theorem21_bound(const ExponentProfile& profile, const GeneratingFunction& psi,
                       double lambda, const SupSearchOptions& options = {});

/// Large-p bound lambda^((d-1)/2) * phi(lambda^(-d)) with the manifold
/// constant set to 1. Requires the psi domain inside [p_c, inf).
double theorem22_bound(const ExponentProfile& profile, const GeneratingFunction& psi,
                       double lambda, const SupSearchOptions& options = {});

/// Sup-norm growth lambda^((d-1)/2), the p -> inf limit of the large-p bound.
double example21_sup_bound(const ExponentProfile& profile, double lambda);

}  // namespace gls::sogge
