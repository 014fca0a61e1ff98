#include "gls/pnorm_curve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls {

PNormCurve::PNormCurve(std::vector<Sample> samples, std::string source)
    : samples_(std::move(samples)), source_(std::move(source)) {
  if (samples_.empty()) throw Error(ErrorCode::BadParams, "p-norm curve needs at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!(s.p > 0.0) || std::isnan(s.p)) {
      throw Error(ErrorCode::BadParams, "p-norm curve sample with p <= 0");
    }
    if (std::isinf(s.p) && i + 1 != samples_.size()) {
      throw Error(ErrorCode::BadParams, "p = inf may only be the last curve sample");
    }
    if (!std::isfinite(s.norm) || s.norm < 0.0) {
      throw Error(ErrorCode::BadParams, "p-norm curve norms must be finite and >= 0");
    }
    if (i > 0 && !(samples_[i - 1].p < s.p)) {
      throw Error(ErrorCode::BadParams, "p-norm curve p values must be strictly increasing");
    }
  }
}

bool PNormCurve::covers(const Interval& domain) const noexcept {
  return p_min() <= domain.lower() && p_max() >= domain.upper();
}

double PNormCurve::log_value_at(double p) const {
  if (std::isnan(p) || !covers(p)) {
    throw Error(ErrorCode::OutOfDomain,
                "p = " + format_real(p, 17) + " outside curve range [" + format_real(p_min(), 12) +
                    ", " + format_real(p_max(), 12) + "]");
  }
  auto hi = std::lower_bound(samples_.begin(), samples_.end(), p,
                             [](const Sample& s, double v) { return s.p < v; });
  if (hi->p == p) return std::log(hi->norm);
  auto lo = hi - 1;
  if (lo->norm == 0.0 || hi->norm == 0.0) return -INFINITY;
  const double x = 1.0 / p;
  const double x_lo = 1.0 / lo->p;
  const double x_hi = 1.0 / hi->p;  // 0 for p = inf
  const double t = (x - x_lo) / (x_hi - x_lo);
  return (1.0 - t) * std::log(lo->norm) + t * std::log(hi->norm);
}

double PNormCurve::value_at(double p) const {
  // Keep node values bit-exact instead of round-tripping through exp(log).
  auto it = std::lower_bound(samples_.begin(), samples_.end(), p,
                             [](const Sample& s, double v) { return s.p < v; });
  if (it != samples_.end() && it->p == p) return it->norm;
  return std::exp(log_value_at(p));
}

PNormCurve PNormCurve::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::BadParams, "scale must be positive");
  auto out = samples_;
  for (auto& s : out) s.norm *= c;
  return PNormCurve(std::move(out), source_);
}

void PNormCurve::write_csv(std::ostream& out) const {
  out << "p,norm\n";
  for (const auto& s : samples_) out << format_real(s.p, 17) << ',' << format_real(s.norm, 17) << '\n';
}

PNormCurve PNormCurve::read_csv(std::istream& in, std::string source) {
  auto table = read_numeric_csv(in, {"p", "norm"});
  std::vector<Sample> samples;
  samples.reserve(table.rows.size());
  for (const auto& row : table.rows) samples.push_back({row[0], row[1]});
  return PNormCurve(std::move(samples), std::move(source));
}

}  // namespace gls
