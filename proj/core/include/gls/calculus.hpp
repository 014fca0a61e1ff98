#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "gls/pnorm_curve.hpp"
#include "gls/psi.hpp"
#include "gls/sup_search.hpp"

namespace gls {

/// Function values at quadrature nodes together with the node weights.
/// This is the discrete measured grid the tail and moment functionals act on.
struct WeightedSamples {
  std::vector<double> values;
  std::vector<double> weights;

  double total_weight() const;
};

/// Tail function samples u -> T(u) = measure{|f| > u}, optionally paired with
/// an upper bound per level (NaN when absent).
class TailCurve {
 public:
  struct Point {
    double u;
    double tail;
    double bound;
  };

  /// Throws Error{BadParams} unless u is strictly increasing and positive and
  /// tail values are non-increasing and >= 0.
  explicit TailCurve(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// `u,T,bound` with 17 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<Point> points_;
};

/// ||f|| in G(psi): sup over the psi domain of ||f||_p / psi(p). The curve is
/// interpolated between samples. For psi_r the result is exactly the curve
/// value at r. Throws Error{DomainMismatch} if the curve does not cover the domain.
SupSearchResult gls_norm(const PNormCurve& curve, const GeneratingFunction& psi,
                         const SupSearchOptions& options = {});

/// phi(delta) = sup_p delta^(1/p) / psi(p), searched in log space.
SupSearchResult fundamental_function(const GeneratingFunction& psi, double delta,
                                     const SupSearchOptions& options = {});
/// Same supremum with `value` left as ln phi(delta).
SupSearchResult log_fundamental_function(const GeneratingFunction& psi, double delta,
                                         const SupSearchOptions& options = {});
/// ln phi evaluated from ln delta, for arguments like lambda^(-d) that underflow.
SupSearchResult log_fundamental_function_at_log(const GeneratingFunction& psi, double log_delta,
                                                const SupSearchOptions& options = {});

/// h(u) = sup_p p (u - ln psi(p)). Defined for every real u; the value may be
/// +inf when the objective grows without bound toward b = +inf.
SupSearchResult young_fenchel(const GeneratingFunction& psi, double u,
                              const SupSearchOptions& options = {});

enum class TailBoundForm {
  /// exp(-h(ln(u / gnorm))) = inf_p (psi(p) gnorm / u)^p. Provable via Chebyshev.
  Chebyshev,
  /// exp(-h(u / gnorm)), the form with the level entering h directly.
  Literal,
};

/// Upper bound on the tail measure{|f| > u} given gnorm = ||f|| in G(psi).
/// Throws Error{BadNorm} for gnorm <= 0.
double tail_bound(const GeneratingFunction& psi, double gnorm, double u,
                  TailBoundForm form = TailBoundForm::Chebyshev,
                  const SupSearchOptions& options = {});

/// Exact tail of the discrete measure at each requested level (sorted on output).
/// Throws Error{EmptyGrid} when there are no samples.
TailCurve empirical_tail(const WeightedSamples& f, std::span<const double> levels);

/// ln of sum_i w_i exp(z f_i), evaluated with the maximum exponent factored out.
double log_moment_generating(const WeightedSamples& f, double z);
/// exp(log_moment_generating); throws Error{Overflow} if that is not representable.
double moment_generating(const WeightedSamples& f, double z);

}  // namespace gls
