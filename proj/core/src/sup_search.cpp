#include "gls/sup_search.hpp"

#include <algorithm>
#include <cmath>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

// Maps the bounded search variable back to p, clamped into the open interval.
class SearchSpace {
 public:
  explicit SearchSpace(const Interval& d) : d_(d), reciprocal_(d.unbounded()) {
    if (reciprocal_) {
      lo_ = 0.0;
      hi_ = 1.0 / d.lower();
    } else {
      lo_ = std::log(d.lower());
      hi_ = std::log(d.upper());
    }
    first_inside_ = std::nextafter(d.lower(), kInf);
    last_inside_ = reciprocal_ ? std::numeric_limits<double>::max() : std::nextafter(d.upper(), 0.0);
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

  double to_p(double v) const {
    double p = reciprocal_ ? 1.0 / v : std::exp(v);
    return std::clamp(p, first_inside_, last_inside_);
  }

  // p-coordinate of the open endpoint at the low / high end of the search variable.
  double endpoint_at_lo() const { return reciprocal_ ? kInf : d_.lower(); }
  double endpoint_at_hi() const { return reciprocal_ ? d_.lower() : d_.upper(); }
  // Closest interior p to a finite endpoint.
  double nearest_inside_lo() const { return first_inside_; }
  double nearest_inside_hi() const { return reciprocal_ ? first_inside_ : last_inside_; }

  bool empty() const { return !(first_inside_ < d_.upper()); }
  bool reciprocal() const { return reciprocal_; }

 private:
  Interval d_;
  bool reciprocal_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double first_inside_ = 0.0;
  double last_inside_ = 0.0;
};

struct Tracker {
  const Objective& f;
  int evaluations = 0;
  double best_value = -INFINITY;
  double best_p = NAN;

  double operator()(double p) {
    ++evaluations;
    const double v = f(p);
    if (std::isnan(v)) {
      throw Error(ErrorCode::NonFiniteObjective,
                  "objective returned NaN at p = " + format_real(p, 17));
    }
    if (v > best_value || std::isnan(best_p)) {
      best_value = v;
      best_p = p;
    }
    return v;
  }
};

}  // namespace

SupSearchResult sup_over_interval(const Objective& objective, const Interval& domain,
                                  const SupSearchOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorCode::BadParams, "sup search tolerance must be > 0");
  const SearchSpace space(domain);
  if (space.empty()) {
    throw Error(ErrorCode::EmptyInterior, "no representable point inside " + domain.to_string());
  }

  const int n = std::max(options.grid_nodes, 65);
  Tracker eval{objective};

  std::vector<double> grid(static_cast<std::size_t>(n) + 2);
  std::vector<double> values(grid.size(), -INFINITY);
  for (int i = 0; i <= n + 1; ++i) {
    grid[i] = space.lo() + (space.hi() - space.lo()) * static_cast<double>(i) / (n + 1);
  }
  int best = 1;
  for (int i = 1; i <= n; ++i) {
    values[i] = eval(space.to_p(grid[i]));
    if (values[i] > values[best]) best = i;
  }

  SupSearchResult result;
  if (values[best] == INFINITY) {
    result.value = INFINITY;
    result.arg = space.to_p(grid[best]);
    result.iterations = eval.evaluations;
    result.converged = true;
    return result;
  }
  if (values[best] == -INFINITY) {
    // Nothing to refine against; report the grid verdict.
    result.value = -INFINITY;
    result.arg = space.to_p(grid[best]);
    result.iterations = eval.evaluations;
    result.converged = true;
    return result;
  }

  // Golden-section maximization on the neighbour bracket.
  double a = grid[best - 1];
  double b = grid[best + 1];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(space.to_p(c));
  double fd = eval(space.to_p(d));
  bool converged = false;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= options.tol * std::max(1.0, std::abs(mid))) {
      converged = true;
      break;
    }
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(space.to_p(d));
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(space.to_p(c));
    }
  }

  const bool at_lo = (a == space.lo());
  const bool at_hi = (b == space.hi());
  const bool at_endpoint = at_lo || at_hi;
  if (at_endpoint) {
    // The bracket never left an open end: the sup is a limit there. Probe the
    // closest interior point to tighten the limit value.
    if (space.reciprocal() && at_lo) {
      const double base = domain.lower();
      const double f8 = eval(base * 1e8);
      const double f12 = eval(base * 1e12);
      const double f16 = eval(base * 1e16);
      const bool growing = f16 > f12 && f12 > f8 && f16 - f8 > std::max(1.0, std::abs(f8));
      if (f16 == INFINITY || growing) {
        result.value = INFINITY;
        result.arg = INFINITY;
        result.iterations = eval.evaluations;
        result.converged = true;
        result.attained = false;
        return result;
      }
    } else {
      eval(at_lo ? space.nearest_inside_lo() : space.nearest_inside_hi());
    }
  }

  result.value = eval.best_value;
  result.iterations = eval.evaluations;
  result.converged = converged;
  if (at_endpoint) {
    result.arg = at_lo ? space.endpoint_at_lo() : space.endpoint_at_hi();
    result.attained = false;
  } else {
    result.arg = eval.best_p;
    result.attained = true;
  }
  return result;
}

SupSearchResult sup_over_interval(const Objective& objective, const Interval& domain, double tol) {
  SupSearchOptions options;
  options.tol = tol;
  return sup_over_interval(objective, domain, options);
}

}  // namespace gls
