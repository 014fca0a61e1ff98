#include "gls/psi.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>

#include "gls/csv.hpp"
#include "gls/error.hpp"

namespace gls {

namespace {

constexpr int kPositivityProbes = 257;

[[noreturn]] void out_of_domain(const GeneratingFunction& psi, double p) {
  throw Error(ErrorCode::OutOfDomain,
              "p = " + format_real(p, 17) + " outside psi domain " + psi.domain().to_string());
}

// Interior probe points: log-spaced for finite b, uniform in 1/p otherwise.
std::vector<double> probe_points(const Interval& d) {
  std::vector<double> pts;
  pts.reserve(kPositivityProbes);
  for (int i = 1; i <= kPositivityProbes; ++i) {
    const double t = static_cast<double>(i) / (kPositivityProbes + 1);
    double p;
    if (d.unbounded()) {
      p = 1.0 / ((1.0 - t) / d.lower());
    } else {
      p = std::exp(std::log(d.lower()) + t * (std::log(d.upper()) - std::log(d.lower())));
    }
    if (d.contains(p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::string_view family_name(PsiFamily family) noexcept {
  switch (family) {
    case PsiFamily::Constant: return "const";
    case PsiFamily::Power: return "pow";
    case PsiFamily::Subgaussian: return "sqrtp";
    case PsiFamily::Extremal: return "extremal";
    case PsiFamily::Natural: return "natural";
    case PsiFamily::Tabulated: return "table";
  }
  return "unknown";
}

GeneratingFunction GeneratingFunction::constant(double level, Interval domain) {
  if (std::isnan(level) || std::isinf(level)) {
    throw Error(ErrorCode::BadParams, "constant psi level must be finite");
  }
  GeneratingFunction psi(PsiFamily::Constant, domain);
  psi.params_ = {level};
  psi.infimum_ = level;
  psi.check_positive();
  return psi;
}

GeneratingFunction GeneratingFunction::power(double alpha, Interval domain) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::BadParams, "power exponent must be finite");
  GeneratingFunction psi(PsiFamily::Power, domain);
  psi.params_ = {alpha};
  if (alpha >= 0.0) {
    psi.infimum_ = std::pow(domain.lower(), alpha);
  } else {
    psi.infimum_ = domain.unbounded() ? 0.0 : std::pow(domain.upper(), alpha);
  }
  psi.check_positive();
  return psi;
}

GeneratingFunction GeneratingFunction::subgaussian(Interval domain) {
  GeneratingFunction psi(PsiFamily::Subgaussian, domain);
  psi.infimum_ = std::sqrt(domain.lower());
  psi.check_positive();
  return psi;
}

GeneratingFunction GeneratingFunction::extremal(double pivot, Interval domain) {
  if (!std::isfinite(pivot) || !domain.contains_closure(pivot)) {
    throw Error(ErrorCode::BadParams, "extremal pivot r = " + format_real(pivot, 17) +
                                          " must be finite and inside " + domain.to_string());
  }
  GeneratingFunction psi(PsiFamily::Extremal, domain);
  psi.params_ = {pivot};
  psi.infimum_ = 1.0;
  return psi;
}

GeneratingFunction GeneratingFunction::natural(std::shared_ptr<const PNormCurve> curve,
                                               Interval domain) {
  if (!curve) throw Error(ErrorCode::BadParams, "natural psi needs a curve");
  if (!curve->covers(domain)) {
    throw Error(ErrorCode::BadParams, "curve does not cover natural psi domain " + domain.to_string());
  }
  GeneratingFunction psi(PsiFamily::Natural, domain);
  psi.curve_ = std::move(curve);
  // Log-linear interpolation puts the extremes on nodes or domain ends.
  double inf = psi.curve_->value_at(domain.lower());
  inf = std::min(inf, psi.curve_->value_at(domain.upper()));
  for (const auto& s : psi.curve_->samples()) {
    if (domain.contains(s.p)) inf = std::min(inf, s.norm);
  }
  psi.infimum_ = inf;
  psi.check_positive();
  return psi;
}

GeneratingFunction GeneratingFunction::tabulated(std::vector<Node> nodes, Interval domain) {
  if (nodes.size() < 2) throw Error(ErrorCode::BadParams, "tabulated psi needs at least two nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i].p) || !(nodes[i].p > 0.0)) {
      throw Error(ErrorCode::BadParams, "tabulated psi nodes need finite p > 0");
    }
    if (i > 0 && !(nodes[i - 1].p < nodes[i].p)) {
      throw Error(ErrorCode::BadParams, "tabulated psi p values must be strictly increasing");
    }
    if (std::isnan(nodes[i].value) || std::isinf(nodes[i].value)) {
      throw Error(ErrorCode::BadParams, "tabulated psi values must be finite");
    }
    if (!(nodes[i].value > 0.0)) {
      throw Error(ErrorCode::NonPositivePsi, "tabulated psi value <= 0 at p = " +
                                                 format_real(nodes[i].p, 17));
    }
  }
  if (!domain.within(nodes.front().p, nodes.back().p)) {
    throw Error(ErrorCode::BadParams,
                "tabulated psi domain " + domain.to_string() + " exceeds the table range");
  }
  GeneratingFunction psi(PsiFamily::Tabulated, domain);
  psi.nodes_ = std::move(nodes);
  double inf = std::min(std::exp(psi.log_table(domain.lower())),
                        std::exp(psi.log_table(domain.upper())));
  for (const auto& n : psi.nodes_) {
    if (domain.contains(n.p)) inf = std::min(inf, n.value);
  }
  psi.infimum_ = inf;
  psi.check_positive();
  return psi;
}

void GeneratingFunction::check_positive() {
  if (!(infimum_ > 0.0)) {
    throw Error(ErrorCode::NonPositivePsi, "inf psi = " + format_real(infimum_, 17) + " on " +
                                               domain_.to_string() + " is not positive");
  }
  for (double p : probe_points(domain_)) {
    const double v = log_eval_unchecked(p);
    if (std::isnan(v) || v == -INFINITY) {
      throw Error(ErrorCode::NonPositivePsi,
                  "psi vanishes or is undefined at p = " + format_real(p, 17));
    }
  }
}

double GeneratingFunction::pivot() const {
  if (!is_extremal()) throw Error(ErrorCode::BadParams, "pivot requested from non-extremal psi");
  return params_[0];
}

double GeneratingFunction::log_table(double p) const {
  auto hi = std::lower_bound(nodes_.begin(), nodes_.end(), p,
                             [](const Node& n, double v) { return n.p < v; });
  if (hi == nodes_.end()) return std::log(nodes_.back().value);
  if (hi->p == p || hi == nodes_.begin()) return std::log(hi->value);
  auto lo = hi - 1;
  const double t = (std::log(p) - std::log(lo->p)) / (std::log(hi->p) - std::log(lo->p));
  return (1.0 - t) * std::log(lo->value) + t * std::log(hi->value);
}

double GeneratingFunction::log_eval_unchecked(double p) const {
  switch (family_) {
    case PsiFamily::Constant: return std::log(params_[0]);
    case PsiFamily::Power: return params_[0] * std::log(p);
    case PsiFamily::Subgaussian: return 0.5 * std::log(p);
    case PsiFamily::Extremal: return p == params_[0] ? 0.0 : INFINITY;
    case PsiFamily::Natural: return curve_->log_value_at(p);
    case PsiFamily::Tabulated: return log_table(p);
  }
  return NAN;
}

double GeneratingFunction::log_eval(double p) const {
  if (is_extremal() && p == params_[0]) return 0.0;
  if (!domain_.contains(p)) out_of_domain(*this, p);
  return log_eval_unchecked(p);
}

double GeneratingFunction::eval(double p) const {
  if (is_extremal() && p == params_[0]) return 1.0;
  if (!domain_.contains(p)) out_of_domain(*this, p);
  switch (family_) {
    case PsiFamily::Constant: return params_[0];
    case PsiFamily::Power: return std::pow(p, params_[0]);
    case PsiFamily::Subgaussian: return std::sqrt(p);
    case PsiFamily::Extremal: return INFINITY;
    case PsiFamily::Natural: return curve_->value_at(p);
    case PsiFamily::Tabulated: {
      auto it = std::lower_bound(nodes_.begin(), nodes_.end(), p,
                                 [](const Node& n, double v) { return n.p < v; });
      if (it != nodes_.end() && it->p == p) return it->value;
      return std::exp(log_table(p));
    }
  }
  return NAN;
}

std::string GeneratingFunction::id() const {
  std::string out(family_name(family_));
  switch (family_) {
    case PsiFamily::Constant:
    case PsiFamily::Power:
    case PsiFamily::Extremal:
      out += ":" + format_real(params_[0], 12);
      break;
    case PsiFamily::Tabulated:
      out += ":" + std::to_string(nodes_.size()) + "nodes";
      break;
    case PsiFamily::Natural:
      if (!curve_->source().empty()) out += ":" + curve_->source();
      break;
    case PsiFamily::Subgaussian:
      break;
  }
  return out + "@" + domain_.to_string();
}

GeneratingFunction make_psi(PsiFamily family, std::span<const double> params, Interval domain) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error(ErrorCode::BadParams, std::string(family_name(family)) + " psi takes " +
                                            std::to_string(n) + " parameter(s), got " +
                                            std::to_string(params.size()));
    }
  };
  switch (family) {
    case PsiFamily::Constant: expect(1); return GeneratingFunction::constant(params[0], domain);
    case PsiFamily::Power: expect(1); return GeneratingFunction::power(params[0], domain);
    case PsiFamily::Subgaussian: expect(0); return GeneratingFunction::subgaussian(domain);
    case PsiFamily::Extremal: expect(1); return GeneratingFunction::extremal(params[0], domain);
    case PsiFamily::Tabulated: {
      if (params.size() % 2 != 0) {
        throw Error(ErrorCode::BadParams, "tabulated psi parameters come in (p, value) pairs");
      }
      std::vector<GeneratingFunction::Node> nodes;
      for (std::size_t i = 0; i < params.size(); i += 2) nodes.push_back({params[i], params[i + 1]});
      return GeneratingFunction::tabulated(std::move(nodes), domain);
    }
    case PsiFamily::Natural:
      throw Error(ErrorCode::BadParams, "natural psi is built from a p-norm curve");
  }
  throw Error(ErrorCode::BadParams, "unknown psi family");
}

GeneratingFunction load_tabulated_psi(std::istream& in, std::optional<Interval> domain) {
  auto table = read_numeric_csv(in, {"p", "psi"});
  std::vector<GeneratingFunction::Node> nodes;
  for (const auto& row : table.rows) nodes.push_back({row[0], row[1]});
  if (nodes.size() < 2) throw Error(ErrorCode::BadParams, "tabulated psi needs at least two nodes");
  Interval d = domain ? *domain : Interval(nodes.front().p, nodes.back().p);
  return GeneratingFunction::tabulated(std::move(nodes), d);
}

GeneratingFunction load_tabulated_psi_file(const std::string& path, std::optional<Interval> domain) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  return load_tabulated_psi(in, domain);
}

}  // namespace gls
