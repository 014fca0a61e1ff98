#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gls/calculus.hpp"
#include "gls/csv.hpp"
#include "gls/eigenfunctions.hpp"
#include "gls/error.hpp"
#include "gls/exponents.hpp"
#include "gls/verify.hpp"

namespace gls::cli {

namespace {

constexpr int kCsvDigits = 12;
constexpr double kDefaultSlopeTol = 0.05;
constexpr double kDefaultMaxDrift = 2.0;
constexpr double kTailSlack = 1e-6;
constexpr int kDefaultLevels = 50;

[[noreturn]] void bad_token(std::string_view token, const std::string& why) {
  throw Error(ErrorCode::ParseError, "bad psi '" + std::string(token) + "': " + why);
}

Interval parse_domain(std::string_view token, std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    bad_token(token, "domain must look like (a,b)");
  }
  auto parts = split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) bad_token(token, "domain must have two endpoints");
  return Interval(parse_real(parts[0]), parse_real(parts[1]));
}

// ---- tabular output -------------------------------------------------------

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> summary;                // CSV trailer lines
  std::vector<verify::CheckOutcome> checks;        // JSON checks
};

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v, kCsvDigits);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return v.find(',') == std::string::npos ? v : "\"" + v + "\"";
        }
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_real(v, 17);
          return v;
        } else {
          return v;
        }
      },
      c);
}

void write_table(std::ostream& out, const Table& t, bool json) {
  if (json) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& c : row) r.push_back(json_cell(c));
      j["rows"].push_back(std::move(r));
    }
    if (!t.checks.empty()) {
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : t.checks) {
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
    }
    out << j.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  for (const auto& line : t.summary) out << line << '\n';
}

bool all_pass(const Table& t) {
  return std::all_of(t.checks.begin(), t.checks.end(), [](const auto& c) { return c.pass; });
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---- option plumbing ------------------------------------------------------

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  int cap = manifold::PNormOptions{}.max_order;
  double sup_tol = SupSearchOptions{}.tol;
  double rel_tol = manifold::PNormOptions{}.rel_tol;
  int threads = 1;

  verify::VerifyOptions verify_options() const {
    verify::VerifyOptions o;
    o.pnorm.max_order = cap;
    o.pnorm.rel_tol = rel_tol;
    o.sup.tol = sup_tol;
    o.threads = threads;
    return o;
  }
};

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", c.output, "Write output to this file instead of stdout");
  sub->add_option("--cap", c.cap, "Quadrature order cap")->check(CLI::Range(2, 1 << 20));
  sub->add_option("--tol", c.sup_tol, "Supremum search tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--rel-tol", c.rel_tol, "p-norm doubling tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "Worker threads for verification")->check(CLI::Range(1, 1024));
}

struct EigenArgs {
  std::string family;
  int k = 0;
  std::string n;

  manifold::Eigenfunction make() const {
    const auto fam = verify::parse_family(family);
    if (fam == verify::EigenFamily::Torus && !n.empty()) {
      auto parts = parse_ints(n);
      if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--n needs two integers");
      return manifold::TorusWave(parts[0], parts[1]);
    }
    if (k < 1) throw Error(ErrorCode::ParseError, "--k must be >= 1");
    return verify::make_eigenfunction(fam, k);
  }
};

void add_eigen(CLI::App* sub, EigenArgs& e, bool allow_n) {
  sub->add_option("--family", e.family, "zonal | hw | torus")->required();
  sub->add_option("--k", e.k, "Degree (torus: frequency n = (k, 0))");
  if (allow_n) sub->add_option("--n", e.n, "Torus frequency as n1,n2");
}

Cell real(double v) { return v; }

// ---- subcommands ----------------------------------------------------------

Table cmd_mu(int d, const std::vector<double>& ps) {
  const sogge::ExponentProfile profile(d);
  Table t{{"p", "mu"}, {}, {}, {}};
  for (double p : ps) t.rows.push_back({real(p), real(sogge::mu(profile, p))});
  return t;
}

Table cmd_fundamental(const GeneratingFunction& psi, const std::vector<double>& deltas,
                      const CommonOptions& c) {
  Table t{{"delta", "phi", "arg", "attained"}, {}, {}, {}};
  for (double delta : deltas) {
    const auto r = fundamental_function(psi, delta, c.verify_options().sup);
    t.rows.push_back({real(delta), real(r.value), real(r.arg), static_cast<long long>(r.attained)});
  }
  return t;
}

Table cmd_conjugate(const GeneratingFunction& psi, const std::vector<double>& us, const CommonOptions& c) {
  Table t{{"u", "h", "arg", "attained"}, {}, {}, {}};
  for (double u : us) {
    const auto r = young_fenchel(psi, u, c.verify_options().sup);
    t.rows.push_back({real(u), real(r.value), real(r.arg), static_cast<long long>(r.attained)});
  }
  return t;
}

Table cmd_norms(const manifold::Eigenfunction& e, const std::vector<double>& ps, const CommonOptions& c,
                const std::string& save_curve) {
  const auto curve = manifold::p_norm_curve(e, ps, c.verify_options().pnorm);
  if (!save_curve.empty()) {
    std::ofstream f(save_curve);
    if (!f) throw Error(ErrorCode::IoError, "cannot write '" + save_curve + "'");
    curve.write_csv(f);
  }
  Table t{{"p", "norm"}, {}, {}, {}};
  for (const auto& s : curve.samples()) t.rows.push_back({real(s.p), real(s.norm)});
  return t;
}

Table cmd_gls_norm(const manifold::Eigenfunction& e, const GeneratingFunction& psi, const CommonOptions& c) {
  const auto o = c.verify_options();
  const auto curve = manifold::p_norm_curve(e, verify::curve_points(psi), o.pnorm);
  const auto r = gls_norm(curve, psi, o.sup);
  Table t{{"eigenfunction", "psi", "lambda", "gls_norm", "arg", "attained"}, {}, {}, {}};
  t.rows.push_back({manifold::label(e), psi.id(), real(manifold::lambda_of(e)), real(r.value), real(r.arg),
                    static_cast<long long>(r.attained)});
  return t;
}

Table cmd_bound(const std::string& theorem, int d, const std::string& psi_token,
                const std::vector<double>& lambdas, const CommonOptions& c) {
  const sogge::ExponentProfile profile(d);
  Table t{{"lambda", "bound"}, {}, {}, {}};
  std::function<double(double)> bound;
  if (theorem == "ex21") {
    bound = [&](double lambda) { return sogge::example21_sup_bound(profile, lambda); };
  } else {
    if (psi_token.empty()) throw Error(ErrorCode::ParseError, "--psi is required for theorem " + theorem);
    auto psi = std::make_shared<GeneratingFunction>(parse_psi(psi_token));
    const auto sup = c.verify_options().sup;
    if (theorem == "21") {
      bound = [=, &profile](double lambda) { return sogge::theorem21_bound(profile, *psi, lambda, sup); };
    } else {
      bound = [=, &profile](double lambda) { return sogge::theorem22_bound(profile, *psi, lambda, sup); };
    }
  }
  for (double lambda : lambdas) t.rows.push_back({real(lambda), real(bound(lambda))});
  return t;
}

void add_report_rows(Table& t, const std::vector<verify::ReportRow>& rows) {
  t.columns = {"family", "param", "k", "lambda", "value", "target", "metric"};
  for (const auto& r : rows) {
    t.rows.push_back({r.family, r.param, static_cast<long long>(r.k), real(r.lambda), real(r.value),
                      real(r.target), real(r.metric)});
  }
}

Table cmd_verify_growth(const std::string& family, double p, const std::vector<int>& ks, int d,
                        double slope_tol, bool expect_match, const CommonOptions& c) {
  const sogge::ExponentProfile profile(d);
  const auto fam = verify::parse_family(family);
  const auto fit = verify::check_source_estimate(fam, p, ks, profile, c.verify_options());
  Table t;
  add_report_rows(t, verify::growth_rows(fam, p, ks, fit));
  const bool below = fit.slope <= fit.target + slope_tol;
  const bool pass = expect_match ? std::abs(fit.slope - fit.target) <= slope_tol : below;
  char line[160];
  std::snprintf(line, sizeof line, "slope=%.3f±%.3f, target=%.3f, %s", fit.slope, slope_tol, fit.target,
                verdict(pass).c_str());
  t.summary.push_back(line);
  t.checks.push_back({"growth:" + std::string(verify::family_name(fam)) + ":p=" + format_real(p, kCsvDigits),
                      pass,
                      "slope=" + format_real(fit.slope, 17) + " target=" + format_real(fit.target, 17) +
                          " residual=" + format_real(fit.residual, 17) +
                          (expect_match ? " mode=match" : " mode=upper")});
  return t;
}

Table cmd_verify_ratio(const std::string& theorem, const std::string& family, const std::string& psi_token,
                       const std::vector<int>& ks, int d, double max_drift, double max_spread,
                       const CommonOptions& c) {
  const sogge::ExponentProfile profile(d);
  const auto fam = verify::parse_family(family);
  const auto psi = parse_psi(psi_token);
  const auto which = theorem == "21" ? verify::Theorem::SmallP : verify::Theorem::LargeP;
  const auto trace = verify::check_theorem_bound(which, fam, psi, ks, profile, c.verify_options());
  Table t;
  add_report_rows(t, verify::ratio_rows(fam, psi, trace));
  bool pass = trace.all_finite() && trace.drift() <= max_drift;
  if (max_spread > 0.0) pass = pass && trace.spread() <= max_spread;
  t.summary.push_back("drift=" + format_real(trace.drift(), 4) + ", spread=" + format_real(trace.spread(), 4) +
                      ", max_drift=" + format_real(max_drift, 4) + ", " + verdict(pass));
  t.checks.push_back({"ratio:" + theorem + ":" + std::string(verify::family_name(fam)) + ":" + psi.id(), pass,
                      "drift=" + format_real(trace.drift(), 17) + " spread=" + format_real(trace.spread(), 17)});
  return t;
}

Table cmd_verify_tail(const std::string& family, int k, const std::string& psi_token,
                      const std::vector<double>& us, int levels, const CommonOptions& c) {
  const auto fam = verify::parse_family(family);
  const auto psi = parse_psi(psi_token);
  auto o = c.verify_options();
  std::vector<double> levels_used = us;
  if (levels_used.empty() && levels != kDefaultLevels) {
    const auto probe = verify::check_tail(fam, k, psi, {}, o);
    levels_used = verify::tail_levels(probe.gnorm, probe.sup_norm, levels);
  }
  const auto check = verify::check_tail(fam, k, psi, levels_used, o);
  Table t{{"u", "T", "bound"}, {}, {}, {}};
  double worst = 0.0;
  for (const auto& pt : check.curve.points()) {
    t.rows.push_back({real(pt.u), real(pt.tail), real(pt.bound)});
    if (pt.bound > 0.0) worst = std::max(worst, pt.tail / pt.bound);
  }
  const bool pass = check.dominated(kTailSlack);
  t.summary.push_back("gnorm=" + format_real(check.gnorm, 6) + ", levels=" +
                      std::to_string(check.curve.size()) + ", max_T_over_bound=" + format_real(worst, 6) +
                      ", " + verdict(pass));
  t.checks.push_back({"tail:" + std::string(verify::family_name(fam)) + ":" + std::to_string(k) + ":" + psi.id(),
                      pass, "gnorm=" + format_real(check.gnorm, 17) + " grid=" + check.grid +
                                " max_T_over_bound=" + format_real(worst, 17)});
  return t;
}

}  // namespace

GeneratingFunction parse_psi(std::string_view token) {
  const auto at = token.find('@');
  const std::string_view head = token.substr(0, at);
  std::optional<Interval> domain;
  if (at != std::string_view::npos) domain = parse_domain(token, token.substr(at + 1));

  const auto colon = head.find(':');
  const std::string family(head.substr(0, colon));
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : head.substr(colon + 1);

  if (family == "table") {
    if (args.empty()) bad_token(token, "table needs a CSV path");
    return load_tabulated_psi_file(std::string(args), domain);
  }
  if (!domain) bad_token(token, "missing @(a,b) domain");
  std::vector<double> params;
  if (!args.empty()) params = parse_reals(args);
  if (family == "const" || family == "constant") return make_psi(PsiFamily::Constant, params, *domain);
  if (family == "pow" || family == "power") return make_psi(PsiFamily::Power, params, *domain);
  if (family == "sqrtp" || family == "subgaussian") return make_psi(PsiFamily::Subgaussian, params, *domain);
  if (family == "extremal") return make_psi(PsiFamily::Extremal, params, *domain);
  bad_token(token, "unknown family '" + family + "'");
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (const auto& field : split(text, ',')) out.push_back(parse_real(field));
  return out;
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  for (const auto& field : split(text, ',')) {
    const double v = parse_real(field);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw Error(ErrorCode::ParseError, "not an integer: " + field);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grand Lebesgue Space norms and eigenfunction bound verification"};
  app.name("gls");
  app.require_subcommand(1);

  CommonOptions common;
  int d = 2;
  std::string mu_ps = "2.5,3,4,5,6,8,10,16,inf";
  std::string norm_ps = "2,4,6,8,inf";
  std::string psi_token;
  std::string list;
  EigenArgs eigen;
  std::string save_curve;
  std::string theorem;
  std::string ks_text = "16,32,64,128";
  std::string p_single;
  double slope_tol = kDefaultSlopeTol;
  bool expect_match = false;
  double max_drift = kDefaultMaxDrift;
  double max_spread = 0.0;
  int levels = kDefaultLevels;

  auto* mu = app.add_subcommand("mu", "Tabulate mu(p) for dimension d");
  mu->add_option("--d", d, "Dimension")->required()->check(CLI::Range(2, 1 << 20));
  mu->add_option("--p", mu_ps, "Comma-separated p values (> 2, inf allowed)");

  auto* pc = app.add_subcommand("pc", "Print the critical exponent 2(d+1)/(d-1)");
  pc->add_option("--d", d, "Dimension")->required()->check(CLI::Range(2, 1 << 20));

  auto* fund = app.add_subcommand("fundamental", "Fundamental function phi(delta) of G(psi)");
  fund->add_option("--psi", psi_token, "Generating function, e.g. const:1@(2,6)")->required();
  fund->add_option("--delta", list, "Comma-separated delta values")->required();

  auto* conj = app.add_subcommand("conjugate", "Young-Fenchel transform h(u) of psi");
  conj->add_option("--psi", psi_token, "Generating function")->required();
  conj->add_option("--u", list, "Comma-separated u values")->required();

  auto* norms = app.add_subcommand("norms", "p-norm curve of an eigenfunction");
  add_eigen(norms, eigen, true);
  norms->add_option("--p", norm_ps, "Comma-separated increasing p values (>= 1, trailing inf allowed)");
  norms->add_option("--save-curve", save_curve, "Also write the curve as p,norm CSV (17 digits)");

  auto* gnorm = app.add_subcommand("gls-norm", "G(psi) norm of an eigenfunction");
  add_eigen(gnorm, eigen, true);
  gnorm->add_option("--psi", psi_token, "Generating function")->required();

  auto* bound = app.add_subcommand("bound", "Right-hand sides of the eigenfunction G(psi) bounds");
  bound->add_option("--theorem", theorem, "21 (small p), 22 (large p) or ex21 (sup-norm)")
      ->required()
      ->check(CLI::IsMember({"21", "22", "ex21"}));
  bound->add_option("--d", d, "Dimension")->check(CLI::Range(2, 1 << 20));
  bound->add_option("--psi", psi_token, "Generating function (not used by ex21)");
  bound->add_option("--lambda", list, "Comma-separated lambda values")->required();

  auto* vgrowth = app.add_subcommand("verify-growth", "Fit ||e_lambda||_p growth against mu(p)");
  vgrowth->add_option("--family", eigen.family, "zonal | hw | torus")->required();
  vgrowth->add_option("--p", p_single, "Exponent p (> 2, or inf)")->required();
  vgrowth->add_option("--ks", ks_text, "Comma-separated degrees");
  vgrowth->add_option("--d", d, "Dimension of the exponent profile")->check(CLI::Range(2, 1 << 20));
  vgrowth->add_option("--slope-tol", slope_tol, "Slope tolerance")->check(CLI::PositiveNumber);
  vgrowth->add_flag("--expect-match", expect_match, "Require |slope - mu(p)| <= tol instead of slope <= mu(p) + tol");

  auto* vratio = app.add_subcommand("verify-ratio", "Trace G(psi) norm over theorem bound across degrees");
  vratio->add_option("--theorem", theorem, "21 or 22")->required()->check(CLI::IsMember({"21", "22"}));
  vratio->add_option("--family", eigen.family, "zonal | hw | torus")->required();
  vratio->add_option("--psi", psi_token, "Generating function")->required();
  vratio->add_option("--ks", ks_text, "Comma-separated degrees");
  vratio->add_option("--d", d, "Dimension of the exponent profile")->check(CLI::Range(2, 1 << 20));
  vratio->add_option("--max-drift", max_drift, "Allowed ratio(lambda_max) / ratio(lambda_min)")
      ->check(CLI::PositiveNumber);
  vratio->add_option("--max-spread", max_spread, "Also require max ratio / min ratio below this")
      ->check(CLI::PositiveNumber);

  auto* vtail = app.add_subcommand("verify-tail", "Empirical tail against the G(psi) tail bound");
  vtail->add_option("--family", eigen.family, "zonal | hw | torus")->required();
  vtail->add_option("--k", eigen.k, "Degree")->required()->check(CLI::PositiveNumber);
  vtail->add_option("--psi", psi_token, "Generating function")->required();
  vtail->add_option("--u", list, "Comma-separated levels (default: automatic above the G(psi) norm)");
  vtail->add_option("--levels", levels, "Number of automatic levels")->check(CLI::Range(1, 100000));

  for (auto* sub : {mu, pc, fund, conj, norms, gnorm, bound, vgrowth, vratio, vtail}) add_common(sub, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json = common.format == "json";
  try {
    std::ostringstream buffer;
    Table table;
    bool scalar = false;
    if (*pc) {
      const sogge::ExponentProfile profile(d);
      if (json) {
        table = Table{{"d", "p_c"}, {{static_cast<long long>(d), real(profile.critical_exponent())}}, {}, {}};
      } else {
        buffer << format_real(profile.critical_exponent(), kCsvDigits) << '\n';
        scalar = true;
      }
    } else if (*mu) {
      table = cmd_mu(d, parse_reals(mu_ps));
    } else if (*fund) {
      table = cmd_fundamental(parse_psi(psi_token), parse_reals(list), common);
    } else if (*conj) {
      table = cmd_conjugate(parse_psi(psi_token), parse_reals(list), common);
    } else if (*norms) {
      table = cmd_norms(eigen.make(), parse_reals(norm_ps), common, save_curve);
    } else if (*gnorm) {
      table = cmd_gls_norm(eigen.make(), parse_psi(psi_token), common);
    } else if (*bound) {
      table = cmd_bound(theorem, d, psi_token, parse_reals(list), common);
    } else if (*vgrowth) {
      table = cmd_verify_growth(eigen.family, parse_real(p_single), parse_ints(ks_text), d, slope_tol,
                                expect_match, common);
    } else if (*vratio) {
      table = cmd_verify_ratio(theorem, eigen.family, psi_token, parse_ints(ks_text), d, max_drift, max_spread,
                               common);
    } else if (*vtail) {
      table = cmd_verify_tail(eigen.family, eigen.k, psi_token, list.empty() ? std::vector<double>{}
                                                                                  : parse_reals(list),
                              levels, common);
    }
    if (!scalar) write_table(buffer, table, json);

    if (common.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(common.output);
      if (!f) throw Error(ErrorCode::IoError, "cannot write '" + common.output + "'");
      f << buffer.str();
    }
    return all_pass(table) ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitCheckFailed;
  }
}

}  // namespace gls::cli
