#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gls/calculus.hpp"
#include "gls/eigenfunctions.hpp"
#include "gls/exponents.hpp"
#include "gls/psi.hpp"

namespace gls::verify {

enum class EigenFamily { Zonal, HighestWeight, Torus };

std::string_view family_name(EigenFamily family) noexcept;
/// Accepts `zonal`, `hw` / `highest-weight`, `torus`. Throws Error{ParseError}.
EigenFamily parse_family(std::string_view text);

/// Degree-k member of a family; the torus uses frequency n = (k, 0).
manifold::Eigenfunction make_eigenfunction(EigenFamily family, int k);

struct VerifyOptions {
  manifold::PNormOptions pnorm{};
  SupSearchOptions sup{};
  int threads = 1;
};

/// Least-squares line through (ln lambda, ln value).
struct GrowthFit {
  std::vector<std::pair<double, double>> pairs;  ///< (lambda, value)
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< max |ln value - fitted|
  double target = 0.0;    ///< exponent under test, NaN when none
};

/// Throws Error{DegenerateInput} for fewer than 3 pairs, repeated lambda, or
/// non-positive entries.
GrowthFit fit_growth(std::span<const std::pair<double, double>> values, double target = NAN);

/// Fit of ||e_lambda||_p against lambda with target mu(p). p = +inf fits the
/// sup-norm. Requires p > 2, |p - p_c| >= 0.25, and at least four degrees
/// spanning three octaves (Error{PreconditionViolation} otherwise).
GrowthFit check_source_estimate(EigenFamily family, double p, std::span<const int> ks,
                                const sogge::ExponentProfile& profile,
                                const VerifyOptions& options = {});

enum class Theorem { SmallP, LargeP };

/// Per-degree comparison of the G(psi) norm against a theorem bound (C = 1).
struct RatioTrace {
  struct Entry {
    int k;
    double lambda;
    double lhs;
    double rhs;
    double ratio;
  };
  std::vector<Entry> entries;  ///< ordered by lambda

  /// ratio at the largest lambda over ratio at the smallest.
  double drift() const;
  /// max ratio over min ratio.
  double spread() const;
  bool all_finite() const;
};

/// p values at which an eigenfunction curve is sampled to cover psi's domain:
/// the pivot for psi_r, 17 points uniform in 1/p over [a, b] for finite b,
/// and a * 2^(j/2), j = 0..6, plus +inf otherwise.
std::vector<double> curve_points(const GeneratingFunction& psi);

/// Throws Error{DomainViolation} when psi's domain is outside the theorem's range.
RatioTrace check_theorem_bound(Theorem which, EigenFamily family, const GeneratingFunction& psi,
                               std::span<const int> ks, const sogge::ExponentProfile& profile,
                               const VerifyOptions& options = {});

/// Result of pairing the empirical tail with its G(psi) bound.
struct TailCheck {
  double gnorm;
  double sup_norm;
  std::string grid;  ///< descriptor of the shared quadrature grid
  TailCurve curve;  ///< (u, T_empirical, T_bound)

  /// True when every T_empirical <= T_bound * (1 + rel_slack).
  bool dominated(double rel_slack = 1e-6) const;
};

/// Levels strictly above gnorm, geometric up to max(2 gnorm, 1.25 sup_norm).
std::vector<double> tail_levels(double gnorm, double sup_norm, int count);

/// Tail and bound on one shared grid. Levels must exceed the G(psi) norm
/// (Error{PreconditionViolation}); pass an empty span to use 50 tail_levels.
TailCheck check_tail(EigenFamily family, int k, const GeneratingFunction& psi,
                     std::span<const double> levels, const VerifyOptions& options = {});

/// One row of a verification report.
struct ReportRow {
  std::string family;
  std::string param;  ///< p or psi id
  int k;
  double lambda;
  double value;
  double target;
  double metric;  ///< slope or ratio
};

struct CheckOutcome {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<ReportRow> growth_rows(EigenFamily family, double p, std::span<const int> ks,
                                   const GrowthFit& fit);
std::vector<ReportRow> ratio_rows(EigenFamily family, const GeneratingFunction& psi,
                                  const RatioTrace& trace);

/// `family,param,k,lambda,value,target,metric`.
void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, int digits = 12);
/// `{"version": 1, "checks": [{"name", "pass", "detail"}]}`.
void write_summary_json(std::ostream& out, std::span<const CheckOutcome> checks);

}  // namespace gls::verify
