#include "gls/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

SupSearchResult single_point(double value, double arg) {
  SupSearchResult r;
  r.value = value;
  r.arg = arg;
  r.iterations = 0;
  r.converged = true;
  r.attained = true;
  return r;
}

void check_samples(const WeightedSamples& f) {
  if (f.values.empty()) throw Error(ErrorCode::EmptyGrid, "measured grid has no nodes");
  if (f.values.size() != f.weights.size()) {
    throw Error(ErrorCode::BadParams, "sample values and weights differ in length");
  }
  for (double w : f.weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadParams, "weights must be positive");
  }
}

}  // namespace

double WeightedSamples::total_weight() const {
  CompensatedSum s;
  for (double w : weights) s.add(w);
  return s.value();
}

TailCurve::TailCurve(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& pt = points_[i];
    if (!(pt.u > 0.0) || !(pt.tail >= 0.0)) {
      throw Error(ErrorCode::BadParams, "tail curve needs u > 0 and T >= 0");
    }
    if (i > 0 && (!(points_[i - 1].u < pt.u) || pt.tail > points_[i - 1].tail)) {
      throw Error(ErrorCode::BadParams, "tail curve must have increasing u and non-increasing T");
    }
  }
}

void TailCurve::write_csv(std::ostream& out) const {
  out << "u,T,bound\n";
  for (const auto& pt : points_) {
    out << format_real(pt.u, 17) << ',' << format_real(pt.tail, 17) << ','
        << format_real(pt.bound, 17) << '\n';
  }
}

SupSearchResult gls_norm(const PNormCurve& curve, const GeneratingFunction& psi,
                         const SupSearchOptions& options) {
  if (psi.is_extremal()) {
    const double r = psi.pivot();
    if (!curve.covers(r)) {
      throw Error(ErrorCode::DomainMismatch, "curve does not reach the extremal pivot r = " +
                                                 format_real(r, 17));
    }
    return single_point(curve.value_at(r), r);
  }
  if (!curve.covers(psi.domain())) {
    throw Error(ErrorCode::DomainMismatch,
                "curve range [" + format_real(curve.p_min(), 12) + ", " +
                    format_real(curve.p_max(), 12) + "] does not cover " + psi.domain().to_string());
  }
  auto result = sup_over_interval(
      [&](double p) { return curve.log_value_at(p) - psi.log_eval(p); }, psi.domain(), options);
  result.value = std::exp(result.value);
  return result;
}

SupSearchResult log_fundamental_function(const GeneratingFunction& psi, double delta,
                                         const SupSearchOptions& options) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::BadParams, "fundamental function needs finite delta > 0");
  }
  return log_fundamental_function_at_log(psi, std::log(delta), options);
}

SupSearchResult log_fundamental_function_at_log(const GeneratingFunction& psi, double log_delta,
                                                const SupSearchOptions& options) {
  if (!std::isfinite(log_delta)) throw Error(ErrorCode::BadParams, "ln delta must be finite");
  if (psi.is_extremal()) return single_point(log_delta / psi.pivot(), psi.pivot());
  return sup_over_interval([&](double p) { return log_delta / p - psi.log_eval(p); },
                           psi.domain(), options);
}

SupSearchResult fundamental_function(const GeneratingFunction& psi, double delta,
                                     const SupSearchOptions& options) {
  auto result = log_fundamental_function(psi, delta, options);
  result.value = std::exp(result.value);
  return result;
}

SupSearchResult young_fenchel(const GeneratingFunction& psi, double u,
                              const SupSearchOptions& options) {
  if (std::isnan(u)) throw Error(ErrorCode::BadParams, "conjugate argument is NaN");
  if (psi.is_extremal()) return single_point(psi.pivot() * u, psi.pivot());
  return sup_over_interval([&](double p) { return p * (u - psi.log_eval(p)); }, psi.domain(),
                           options);
}

double tail_bound(const GeneratingFunction& psi, double gnorm, double u, TailBoundForm form,
                  const SupSearchOptions& options) {
  if (!(gnorm > 0.0) || !std::isfinite(gnorm)) {
    throw Error(ErrorCode::BadNorm, "tail bound needs a finite G(psi) norm > 0, got " +
                                        format_real(gnorm, 17));
  }
  if (!(u > 0.0) || !std::isfinite(u)) throw Error(ErrorCode::BadParams, "tail level must be > 0");
  const double level = form == TailBoundForm::Chebyshev ? std::log(u / gnorm) : u / gnorm;
  return std::exp(-young_fenchel(psi, level, options).value);
}

TailCurve empirical_tail(const WeightedSamples& f, std::span<const double> levels) {
  check_samples(f);
  std::vector<double> us(levels.begin(), levels.end());
  for (double u : us) {
    if (!(u > 0.0) || std::isnan(u)) throw Error(ErrorCode::BadParams, "tail levels must be > 0");
  }
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());

  std::vector<std::size_t> order(f.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(f.values[i]) < std::abs(f.values[j]);
  });
  // suffix[i] = total weight of sorted nodes i..end.
  std::vector<double> moduli(order.size());
  std::vector<double> suffix(order.size() + 1, 0.0);
  CompensatedSum acc;
  for (std::size_t i = order.size(); i-- > 0;) {
    moduli[i] = std::abs(f.values[order[i]]);
    acc.add(f.weights[order[i]]);
    suffix[i] = acc.value();
  }

  std::vector<TailCurve::Point> points;
  points.reserve(us.size());
  for (double u : us) {
    const auto first_above = std::upper_bound(moduli.begin(), moduli.end(), u) - moduli.begin();
    points.push_back({u, suffix[static_cast<std::size_t>(first_above)], NAN});
  }
  return TailCurve(std::move(points));
}

double log_moment_generating(const WeightedSamples& f, double z) {
  check_samples(f);
  if (!std::isfinite(z)) throw Error(ErrorCode::BadParams, "moment generating argument must be finite");
  double shift = -INFINITY;
  for (double v : f.values) shift = std::max(shift, z * v);
  CompensatedSum s;
  for (std::size_t i = 0; i < f.values.size(); ++i) s.add(f.weights[i] * std::exp(z * f.values[i] - shift));
  return shift + std::log(s.value());
}

double moment_generating(const WeightedSamples& f, double z) {
  const double log_value = log_moment_generating(f, z);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw Error(ErrorCode::Overflow, "moment generating function overflows: ln value = " +
                                         format_real(log_value, 17));
  }
  return std::exp(log_value);
}

}  // namespace gls
