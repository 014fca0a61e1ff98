#include "gls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <set>
#include <thread>

#include <json.hpp>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls::verify {

namespace {

constexpr double kCriticalExclusion = 0.25;
constexpr int kDefaultTailLevels = 50;

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results land in index
// order, so output does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t n, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  std::vector<decltype(fn(std::size_t{0}))> out(n);
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void check_degrees(std::span<const int> ks) {
  if (ks.size() < 4) {
    throw Error(ErrorCode::PreconditionViolation, "need at least four degrees, got " + std::to_string(ks.size()));
  }
  const auto [lo, hi] = std::minmax_element(ks.begin(), ks.end());
  if (*lo < 1 || *hi < 8 * *lo) {
    throw Error(ErrorCode::PreconditionViolation, "degrees must be >= 1 and span at least three octaves");
  }
}

}  // namespace

std::string_view family_name(EigenFamily family) noexcept {
  switch (family) {
    case EigenFamily::Zonal: return "zonal";
    case EigenFamily::HighestWeight: return "hw";
    case EigenFamily::Torus: return "torus";
  }
  return "unknown";
}

EigenFamily parse_family(std::string_view text) {
  if (text == "zonal") return EigenFamily::Zonal;
  if (text == "hw" || text == "highest-weight" || text == "highest_weight") return EigenFamily::HighestWeight;
  if (text == "torus") return EigenFamily::Torus;
  throw Error(ErrorCode::ParseError, "unknown eigenfunction family '" + std::string(text) + "'");
}

manifold::Eigenfunction make_eigenfunction(EigenFamily family, int k) {
  switch (family) {
    case EigenFamily::Zonal: return manifold::SphereHarmonic(k, manifold::HarmonicKind::Zonal);
    case EigenFamily::HighestWeight:
      return manifold::SphereHarmonic(k, manifold::HarmonicKind::HighestWeight);
    case EigenFamily::Torus: return manifold::TorusWave(k, 0);
  }
  throw Error(ErrorCode::BadParams, "unknown eigenfunction family");
}

GrowthFit fit_growth(std::span<const std::pair<double, double>> values, double target) {
  if (values.size() < 3) throw Error(ErrorCode::DegenerateInput, "growth fit needs at least three points");
  std::set<double> seen;
  for (const auto& [lambda, v] : values) {
    if (!(lambda > 0.0) || !(v > 0.0) || !std::isfinite(lambda) || !std::isfinite(v)) {
      throw Error(ErrorCode::DegenerateInput, "growth fit needs finite positive lambda and values");
    }
    if (!seen.insert(lambda).second) {
      throw Error(ErrorCode::DegenerateInput, "repeated lambda " + format_real(lambda, 17));
    }
  }
  const auto n = static_cast<double>(values.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [lambda, v] : values) {
    mean_x += std::log(lambda);
    mean_y += std::log(v);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [lambda, v] : values) {
    const double dx = std::log(lambda) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - mean_y);
  }
  GrowthFit fit;
  fit.pairs.assign(values.begin(), values.end());
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (const auto& [lambda, v] : values) {
    fit.residual = std::max(fit.residual, std::abs(std::log(v) - fit.intercept - fit.slope * std::log(lambda)));
  }
  fit.target = target;
  return fit;
}

GrowthFit check_source_estimate(EigenFamily family, double p, std::span<const int> ks,
                                const sogge::ExponentProfile& profile, const VerifyOptions& options) {
  const double target = sogge::mu(profile, p);
  if (std::abs(p - profile.critical_exponent()) < kCriticalExclusion) {
    throw Error(ErrorCode::PreconditionViolation,
                "p = " + format_real(p, 12) + " is within 0.25 of p_c = " +
                    format_real(profile.critical_exponent(), 12));
  }
  check_degrees(ks);
  auto pairs = parallel_map(ks.size(), options.threads, [&](std::size_t i) {
    const auto e = make_eigenfunction(family, ks[i]);
    return std::pair{manifold::lambda_of(e), manifold::p_norm(e, p, options.pnorm).value};
  });
  return fit_growth(pairs, target);
}

double RatioTrace::drift() const {
  if (entries.empty()) return NAN;
  return entries.back().ratio / entries.front().ratio;
}

double RatioTrace::spread() const {
  if (entries.empty()) return NAN;
  auto [lo, hi] = std::minmax_element(entries.begin(), entries.end(),
                                      [](const Entry& a, const Entry& b) { return a.ratio < b.ratio; });
  return hi->ratio / lo->ratio;
}

bool RatioTrace::all_finite() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) {
    return std::isfinite(e.ratio) && e.ratio > 0.0 && std::isfinite(e.lhs) && std::isfinite(e.rhs);
  });
}

std::vector<double> curve_points(const GeneratingFunction& psi) {
  if (psi.is_extremal()) return {psi.pivot()};
  const double a = psi.domain().lower();
  const double b = psi.domain().upper();
  std::vector<double> ps;
  if (std::isinf(b)) {
    for (int j = 0; j <= 6; ++j) ps.push_back(a * std::pow(2.0, 0.5 * j));
    ps.push_back(INFINITY);
    return ps;
  }
  constexpr int kPoints = 17;
  for (int i = 0; i < kPoints; ++i) {
    // Uniform in 1/p, from b down to a, so p comes out increasing.
    const double x = 1.0 / b + (1.0 / a - 1.0 / b) * (kPoints - 1 - i) / (kPoints - 1);
    ps.push_back(1.0 / x);
  }
  ps.front() = a;
  ps.back() = b;
  return ps;
}

RatioTrace check_theorem_bound(Theorem which, EigenFamily family, const GeneratingFunction& psi,
                               std::span<const int> ks, const sogge::ExponentProfile& profile,
                               const VerifyOptions& options) {
  auto bound = [&](double lambda) {
    return which == Theorem::SmallP ? sogge::theorem21_bound(profile, psi, lambda, options.sup)
                                    : sogge::theorem22_bound(profile, psi, lambda, options.sup);
  };
  bound(1.0);  // domain precondition, before any quadrature work
  const auto ps = curve_points(psi);
  RatioTrace trace;
  trace.entries = parallel_map(ks.size(), options.threads, [&](std::size_t i) {
    const auto e = make_eigenfunction(family, ks[i]);
    const double lambda = manifold::lambda_of(e);
    const auto curve = manifold::p_norm_curve(e, ps, options.pnorm);
    const double lhs = gls_norm(curve, psi, options.sup).value;
    const double rhs = bound(lambda);
    return RatioTrace::Entry{ks[i], lambda, lhs, rhs, lhs / rhs};
  });
  std::stable_sort(trace.entries.begin(), trace.entries.end(),
                   [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
  return trace;
}

bool TailCheck::dominated(double rel_slack) const {
  return std::all_of(curve.points().begin(), curve.points().end(),
                     [&](const TailCurve::Point& pt) { return pt.tail <= pt.bound * (1.0 + rel_slack); });
}

std::vector<double> tail_levels(double gnorm, double sup_norm, int count) {
  if (!(gnorm > 0.0) || count < 1) throw Error(ErrorCode::BadParams, "tail levels need gnorm > 0 and count >= 1");
  const double lo = gnorm * (1.0 + 1e-3);
  const double hi = std::max(2.0 * gnorm, 1.25 * sup_norm);
  std::vector<double> us(count);
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    us[i] = lo * std::pow(hi / lo, t);
  }
  return us;
}

TailCheck check_tail(EigenFamily family, int k, const GeneratingFunction& psi,
                     std::span<const double> levels, const VerifyOptions& options) {
  const auto e = make_eigenfunction(family, k);
  const auto ps = curve_points(psi);
  const auto spec = manifold::converged_grid(e, ps, options.pnorm);
  const auto grid = manifold::make_grid(spec);

  std::vector<PNormCurve::Sample> samples;
  for (double p : ps) {
    samples.push_back({p, std::isinf(p) ? manifold::sup_norm(e) : manifold::discrete_p_norm(e, grid, p)});
  }
  const PNormCurve curve(std::move(samples), manifold::label(e) + "@" + grid.descriptor());
  const double gnorm = gls_norm(curve, psi, options.sup).value;
  const double sup = manifold::sup_norm(e);

  std::vector<double> us(levels.begin(), levels.end());
  if (us.empty()) us = tail_levels(gnorm, sup, kDefaultTailLevels);
  for (double u : us) {
    if (!(u > gnorm)) {
      throw Error(ErrorCode::PreconditionViolation, "tail level " + format_real(u, 12) +
                                                        " is not above the G(psi) norm " +
                                                        format_real(gnorm, 12));
    }
  }
  const auto tail = empirical_tail(manifold::sample(e, grid), us);
  std::vector<TailCurve::Point> points(tail.points().begin(), tail.points().end());
  for (auto& pt : points) pt.bound = tail_bound(psi, gnorm, pt.u, TailBoundForm::Chebyshev, options.sup);
  return TailCheck{gnorm, sup, grid.descriptor(), TailCurve(std::move(points))};
}

std::vector<ReportRow> growth_rows(EigenFamily family, double p, std::span<const int> ks,
                                   const GrowthFit& fit) {
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < fit.pairs.size(); ++i) {
    rows.push_back({std::string(family_name(family)), format_real(p, 12), i < ks.size() ? ks[i] : 0,
                    fit.pairs[i].first, fit.pairs[i].second, fit.target, fit.slope});
  }
  return rows;
}

std::vector<ReportRow> ratio_rows(EigenFamily family, const GeneratingFunction& psi, const RatioTrace& trace) {
  std::vector<ReportRow> rows;
  for (const auto& e : trace.entries) {
    rows.push_back({std::string(family_name(family)), psi.id(), e.k, e.lambda, e.lhs, e.rhs, e.ratio});
  }
  return rows;
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, int digits) {
  out << "family,param,k,lambda,value,target,metric\n";
  for (const auto& r : rows) {
    // psi ids contain commas; quote them.
    const bool quote = r.param.find(',') != std::string::npos;
    out << r.family << ',' << (quote ? "\"" + r.param + "\"" : r.param) << ',' << r.k << ','
        << format_real(r.lambda, digits) << ',' << format_real(r.value, digits) << ','
        << format_real(r.target, digits) << ',' << format_real(r.metric, digits) << '\n';
  }
}

void write_summary_json(std::ostream& out, std::span<const CheckOutcome> checks) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace gls::verify
