#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gls/interval.hpp"

namespace gls {

/// Sampled map p -> ||f||_p for one fixed function. The last sample may sit
/// at p = +inf (the sup-norm). Between samples, ln ||f||_p is interpolated
/// linearly in 1/p, which reproduces curves of the form A * B^(1/p) exactly.
class PNormCurve {
 public:
  struct Sample {
    double p;
    double norm;
  };

  /// Throws Error{BadParams} unless p is strictly increasing and positive
  /// (only the last p may be +inf) and every norm is finite and >= 0.
  explicit PNormCurve(std::vector<Sample> samples, std::string source = {});

  std::span<const Sample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::string& source() const noexcept { return source_; }

  double p_min() const noexcept { return samples_.front().p; }
  double p_max() const noexcept { return samples_.back().p; }

  /// True when [p_min, p_max] contains the closure of `domain`.
  bool covers(const Interval& domain) const noexcept;
  bool covers(double p) const noexcept { return p >= p_min() && p <= p_max(); }

  /// Interpolated norm; exact at sample nodes. Throws Error{OutOfDomain}
  /// outside [p_min, p_max].
  double value_at(double p) const;
  /// ln of value_at; -inf where the curve is zero.
  double log_value_at(double p) const;

  /// Curve of c * f, c > 0.
  PNormCurve scaled(double c) const;

  /// `p,norm` with 17 significant digits.
  void write_csv(std::ostream& out) const;
  static PNormCurve read_csv(std::istream& in, std::string source = "csv");

 private:
  std::vector<Sample> samples_;
  std::string source_;
};

}  // namespace gls
