#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gls/interval.hpp"
#include "gls/pnorm_curve.hpp"

namespace gls {

enum class PsiFamily { Constant, Power, Subgaussian, Extremal, Natural, Tabulated };

std::string_view family_name(PsiFamily family) noexcept;

/// A generating function psi on an open interval (a, b) with inf psi > 0.
///
/// Values are immutable after construction. The extremal family psi_r is a
/// tag rather than a table: it evaluates to exactly 1 at p = r and +inf at
/// every other interior point, so sup-type functionals collapse to the single
/// point r without any large-number surrogate.
class GeneratingFunction {
 public:
  struct Node {
    double p;
    double value;
  };

  /// psi(p) = c, c > 0.
  static GeneratingFunction constant(double level, Interval domain);
  /// psi(p) = p^alpha. Negative alpha is accepted while the infimum stays positive.
  static GeneratingFunction power(double alpha, Interval domain);
  /// psi(p) = sqrt(p); defaults to (1, inf).
  static GeneratingFunction subgaussian(Interval domain = Interval(1.0, kInf));
  /// psi_r: 1 at p = r, +inf elsewhere. Requires r in [a, b], r finite.
  static GeneratingFunction extremal(double pivot, Interval domain);
  /// psi_f(p) = ||f||_p read off a sampled curve covering the domain.
  static GeneratingFunction natural(std::shared_ptr<const PNormCurve> curve, Interval domain);
  /// Strictly increasing p nodes with positive values; ln psi is linear in
  /// ln p between nodes. The domain must lie inside [first p, last p].
  static GeneratingFunction tabulated(std::vector<Node> nodes, Interval domain);

  PsiFamily family() const noexcept { return family_; }
  const Interval& domain() const noexcept { return domain_; }
  std::span<const double> params() const noexcept { return params_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  const std::shared_ptr<const PNormCurve>& curve() const noexcept { return curve_; }

  bool is_extremal() const noexcept { return family_ == PsiFamily::Extremal; }
  /// Pivot r of the extremal family.
  double pivot() const;

  /// psi(p) > 0; +inf for the extremal family off the pivot.
  /// Throws Error{OutOfDomain} outside the open domain (except p = r).
  double eval(double p) const;
  /// ln psi(p), closed form per family.
  double log_eval(double p) const;

  /// inf of psi over the domain (closed form or exact over nodes).
  double infimum() const noexcept { return infimum_; }

  /// Compact identifier such as `const:1@(2,6)` or `sqrtp@(1,inf)`.
  std::string id() const;

 private:
  GeneratingFunction(PsiFamily family, Interval domain) : family_(family), domain_(domain) {}

  void check_positive();
  double log_eval_unchecked(double p) const;
  double log_table(double p) const;

  PsiFamily family_;
  Interval domain_;
  std::vector<double> params_;
  std::vector<Node> nodes_;
  std::shared_ptr<const PNormCurve> curve_;
  double infimum_ = 0.0;
};

/// Generic constructor. Parameters per family: Constant {c}; Power {alpha};
/// Subgaussian {}; Extremal {r}; Tabulated {p0, v0, p1, v1, ...}.
/// Natural needs a curve and is rejected here with BadParams.
GeneratingFunction make_psi(PsiFamily family, std::span<const double> params, Interval domain);

inline double eval_psi(const GeneratingFunction& psi, double p) { return psi.eval(p); }
inline double log_psi(const GeneratingFunction& psi, double p) { return psi.log_eval(p); }

/// Loads a tabulated psi from CSV with header `p,psi`. Without an explicit
/// domain the open interval spanned by the first and last node is used.
GeneratingFunction load_tabulated_psi(std::istream& in, std::optional<Interval> domain = {});
GeneratingFunction load_tabulated_psi_file(const std::string& path,
                                           std::optional<Interval> domain = {});

}  // namespace gls
