#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace gls {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Open parameter interval (a, b) with 1 <= a < b <= +inf.
class Interval {
 public:
  /// Throws Error{InvalidDomain} unless 1 <= a < b and a is finite.
  Interval(double a, double b);

  double lower() const noexcept { return a_; }
  double upper() const noexcept { return b_; }
  bool unbounded() const noexcept { return std::isinf(b_); }

  /// Strict interior membership.
  bool contains(double p) const noexcept { return p > a_ && p < b_; }
  bool contains_closure(double p) const noexcept { return p >= a_ && p <= b_; }

  /// True when this interval lies inside [lo, hi].
  bool within(double lo, double hi) const noexcept { return a_ >= lo && b_ <= hi; }

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
};

}  // namespace gls
