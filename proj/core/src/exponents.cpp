#include "gls/exponents.hpp"

#include <cmath>

#include "gls/calculus.hpp"
#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls::sogge {

namespace {

// Slack for comparing user-supplied endpoints against an inexact p_c.
constexpr double kEndpointSlack = 1e-12;

double checked_log_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::BadParams, "lambda must be finite and > 0, got " + format_real(lambda, 17));
  }
  return std::log(lambda);
}

}  // namespace

ExponentProfile::ExponentProfile(int dimension) : d_(dimension) {
  if (dimension < 2) {
    throw Error(ErrorCode::BadParams, "dimension must be >= 2, got " + std::to_string(dimension));
  }
  p_c_ = 2.0 * (d_ + 1) / (d_ - 1);
}

double ExponentProfile::mu_small(double p) const noexcept {
  return 0.5 * (d_ - 1) * (0.5 - 1.0 / p);
}

double ExponentProfile::mu_large(double p) const noexcept {
  return d_ * (0.5 - 1.0 / p) - 0.5;
}

double mu(const ExponentProfile& profile, double p) {
  if (std::isnan(p) || p <= 2.0) {
    throw Error(ErrorCode::OutOfRange, "mu(p) needs p > 2, got " + format_real(p, 17));
  }
  if (std::isinf(p)) return 0.5 * (profile.dimension() - 1);
  return p <= profile.critical_exponent() ? profile.mu_small(p) : profile.mu_large(p);
}

double theorem21_bound(const ExponentProfile& profile, const GeneratingFunction& psi,
                       double lambda, const SupSearchOptions& options) {
  const double p_c = profile.critical_exponent();
  const auto& dom = psi.domain();
  if (dom.lower() < 2.0 || dom.upper() > p_c * (1.0 + kEndpointSlack) ||
      (psi.is_extremal() && psi.pivot() <= 2.0)) {
    throw Error(ErrorCode::DomainViolation, "small-p bound needs psi domain inside (2, " +
                                                format_real(p_c, 12) + "], got " + dom.to_string());
  }
  const double log_lambda = checked_log_lambda(lambda);
  const int d = profile.dimension();
  const double log_phi =
      log_fundamental_function_at_log(psi, 0.5 * (1 - d) * log_lambda, options).value;
  return std::exp(0.25 * (d - 1) * log_lambda + log_phi);
}

double theorem22_bound(const ExponentProfile& profile, const GeneratingFunction& psi,
                       double lambda, const SupSearchOptions& options) {
  const double p_c = profile.critical_exponent();
  const auto& dom = psi.domain();
  if (dom.lower() < p_c * (1.0 - kEndpointSlack)) {
    throw Error(ErrorCode::DomainViolation, "large-p bound needs psi domain inside [" +
                                                format_real(p_c, 12) + ", inf), got " +
                                                dom.to_string());
  }
  const double log_lambda = checked_log_lambda(lambda);
  const int d = profile.dimension();
  const double log_phi = log_fundamental_function_at_log(psi, -d * log_lambda, options).value;
  return std::exp(0.5 * (d - 1) * log_lambda + log_phi);
}

double example21_sup_bound(const ExponentProfile& profile, double lambda) {
  checked_log_lambda(lambda);
  return std::pow(lambda, 0.5 * (profile.dimension() - 1));
}

}  // namespace gls::sogge
