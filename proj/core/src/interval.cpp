#include "gls/interval.hpp"

#include "gls/error.hpp"
#include "gls/csv.hpp"

namespace gls {

Interval::Interval(double a, double b) : a_(a), b_(b) {
  if (std::isnan(a) || std::isnan(b) || !std::isfinite(a) || a < 1.0 || !(a < b)) {
    throw Error(ErrorCode::InvalidDomain,
                "interval requires 1 <= a < b, got (" + format_real(a, 17) + ", " +
                    format_real(b, 17) + ")");
  }
}

std::string Interval::to_string() const {
  return "(" + format_real(a_, 12) + "," + format_real(b_, 12) + ")";
}

}  // namespace gls
