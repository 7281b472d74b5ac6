#include "ncquad/cli.hpp"

#include "ncquad/composite.hpp"
#include "ncquad/diagnostics.hpp"
#include "ncquad/expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ncquad {

namespace {

using nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + cfg.output_path + "'");
  f << text;
}

std::string fmt(const Real& v) { return v.str_roundtrip(); }

// Step text is exact rational input ("5", "5/3", "0.1"); panel counts are
// derived in exact arithmetic so commensurability is not a rounding question.
long panel_count_for(const Rational& a, const Rational& b, int n, const Rational& h) {
  if (h <= 0) throw InputError("step must be positive");
  Rational count = (b - a) / (h * (n - 1));
  if (!is_integer(count) || count <= 0)
    throw InputError("step " + to_string(h) + " does not split [" + to_string(a) + ", " +
                     to_string(b) + "] into whole " + std::to_string(n) + "-point panels");
  if (count > 10000000) throw InputError("step implies too many panels");
  return static_cast<long>(count.get_num().get_si());
}

struct Problem {
  ExprAst ast;
  Rational a;
  Rational b;
  Integrand f;
  std::optional<Real> reference;
};

Problem make_problem(const RunConfig& cfg) {
  Problem pr;
  try {
    pr.ast = parse(cfg.function_source);
  } catch (const ParseError& e) {
    throw InputError(std::string("cannot parse function: ") + e.what());
  }
  pr.a = parse_rational(cfg.a_text);
  pr.b = parse_rational(cfg.b_text);
  if (!(pr.b > pr.a)) throw InputError("need b > a");
  const int p = cfg.precision;
  pr.f = [ast = pr.ast, p](const Real& x) { return eval(ast, x, p); };
  if (cfg.reference_text) {
    const int ref_digits = std::max<int>(p, static_cast<int>(cfg.reference_text->size()));
    pr.reference = Real::parse(*cfg.reference_text, ref_digits);
  }
  return pr;
}

void warn_precision(const RunConfig& cfg, std::ostream& err) {
  if (cfg.n > 3 && cfg.precision < 32)
    err << "warning: " << cfg.precision << " digits is likely too low for n = " << cfg.n
        << "; composite runs of this order typically need 32 digits or more\n";
}

ordered_json result_json(const Real& h, const RunConfig& cfg, long panels,
                         const CompositeOutput& out, const std::optional<Real>& e_true) {
  ordered_json j;
  j["h"] = fmt(h);
  j["n"] = cfg.n;
  j["panels"] = panels;
  j["precision"] = cfg.precision;
  j["Q"] = fmt(out.q);
  j["E_tilde"] = fmt(out.e_tilde);
  j["S"] = fmt(out.s);
  j["E_bar"] = out.e_bar ? ordered_json(fmt(*out.e_bar)) : ordered_json(nullptr);
  j["E_true"] = e_true ? ordered_json(fmt(*e_true)) : ordered_json(nullptr);
  if (out.e_bar && e_true)
    j["realistic"] = is_realistic(*out.e_bar, *e_true);
  else
    j["realistic"] = nullptr;
  j["failed_panels"] = out.failed_panels;
  if (cfg.per_panel) {
    auto arr = ordered_json::array();
    for (size_t i = 0; i < out.per_panel.size(); ++i) {
      const RuleOutput& ro = out.per_panel[i];
      ordered_json pj;
      pj["panel"] = i;
      pj["Q"] = fmt(ro.q);
      auto terms = ordered_json::array();
      for (const Real& t : ro.correction_terms) terms.push_back(fmt(t));
      pj["correction_terms"] = std::move(terms);
      pj["E_tilde"] = fmt(ro.e_tilde);
      pj["S"] = fmt(ro.s);
      pj["E_bar"] = ro.e_bar ? ordered_json(fmt(*ro.e_bar)) : ordered_json(nullptr);
      arr.push_back(std::move(pj));
    }
    j["per_panel"] = std::move(arr);
  }
  return j;
}

std::string csv_row(const Real& h, int n, const CompositeOutput& out,
                    const std::optional<Real>& e_true) {
  std::ostringstream os;
  os << fmt(h) << "," << n << "," << fmt(out.q) << "," << fmt(out.e_tilde) << "," << fmt(out.s)
     << ",";
  if (out.e_bar) os << fmt(*out.e_bar);
  os << ",";
  if (e_true) os << fmt(*e_true);
  os << "\n";
  return os.str();
}

std::string result_table(const Real& h, const RunConfig& cfg, long panels,
                         const CompositeOutput& out, const std::optional<Real>& e_true) {
  std::ostringstream os;
  os << "n         = " << cfg.n << "\n";
  os << "panels    = " << panels << "\n";
  os << "h         = " << h.str() << "\n";
  os << "precision = " << cfg.precision << "\n";
  os << "Q         = " << out.q.str() << "\n";
  os << "E_tilde   = " << out.e_tilde.str() << "\n";
  os << "S         = " << out.s.str() << "\n";
  if (out.e_bar)
    os << "E_bar     = " << out.e_bar->str() << "\n";
  else
    os << "E_bar     = unavailable (" << out.failed_panels.size() << " panel(s) failed)\n";
  if (e_true) {
    os << "E_true    = " << e_true->str() << "\n";
    if (out.e_bar)
      os << "verdict   = " << (is_realistic(*out.e_bar, *e_true) ? "realistic" : "not realistic")
         << "\n";
  }
  if (cfg.per_panel) {
    os << "per panel:\n";
    for (size_t i = 0; i < out.per_panel.size(); ++i) {
      const RuleOutput& ro = out.per_panel[i];
      os << "  [" << i << "] Q = " << ro.q.str() << ", E_tilde = " << ro.e_tilde.str()
         << ", S = " << ro.s.str()
         << ", E_bar = " << (ro.e_bar ? ro.e_bar->str() : std::string("unavailable")) << "\n";
    }
  }
  return os.str();
}

int cmd_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  warn_precision(cfg, err);
  Problem pr = make_problem(cfg);

  long panels = 0;
  if (cfg.panels) {
    panels = *cfg.panels;
    if (panels < 1) throw InputError("--panels must be at least 1");
    if (panels > 10000000) throw InputError("too many panels");
  } else {
    panels = panel_count_for(pr.a, pr.b, cfg.n, parse_rational(cfg.steps.at(0)));
  }

  const int p = cfg.precision;
  CompositePlan pl = plan(Real::from_rational(pr.a, p), Real::from_rational(pr.b, p), cfg.n, panels);
  CompositeOutput res = integrate(pl, pr.f, p);
  std::optional<Real> e_true;
  if (pr.reference) e_true = *pr.reference - res.s;

  if (cfg.format == "json") {
    emit(result_json(pl.h, cfg, panels, res, e_true).dump(2) + "\n", cfg, out);
  } else if (cfg.format == "csv") {
    emit("h,n,Q,E_tilde,S,E_bar,E_true\n" + csv_row(pl.h, cfg.n, res, e_true), cfg, out);
  } else {
    emit(result_table(pl.h, cfg, panels, res, e_true), cfg, out);
  }
  return res.e_bar_valid() ? 0 : 3;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  warn_precision(cfg, err);
  Problem pr = make_problem(cfg);
  const int p = cfg.precision;

  bool any_failed = false;
  std::vector<std::tuple<Real, long, CompositeOutput, std::optional<Real>>> rows;
  for (const std::string& step_text : cfg.steps) {
    const long panels = panel_count_for(pr.a, pr.b, cfg.n, parse_rational(step_text));
    CompositePlan pl =
        plan(Real::from_rational(pr.a, p), Real::from_rational(pr.b, p), cfg.n, panels);
    CompositeOutput res = integrate(pl, pr.f, p);
    std::optional<Real> e_true;
    if (pr.reference) e_true = *pr.reference - res.s;
    any_failed = any_failed || !res.e_bar_valid();
    rows.emplace_back(pl.h, panels, std::move(res), std::move(e_true));
  }

  if (cfg.format == "json") {
    auto arr = ordered_json::array();
    for (const auto& [h, panels, res, e_true] : rows)
      arr.push_back(result_json(h, cfg, panels, res, e_true));
    emit(arr.dump(2) + "\n", cfg, out);
  } else if (cfg.format == "csv") {
    std::string text = "h,n,Q,E_tilde,S,E_bar,E_true\n";
    for (const auto& [h, panels, res, e_true] : rows) text += csv_row(h, cfg.n, res, e_true);
    emit(text, cfg, out);
  } else {
    std::string text;
    for (const auto& [h, panels, res, e_true] : rows)
      text += result_table(h, cfg, panels, res, e_true) + "\n";
    emit(text, cfg, out);
  }
  return any_failed ? 3 : 0;
}

int cmd_weights(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const WeightSet ws = compute_weights(cfg.n);
  if (cfg.format == "json") {
    emit(weights_to_json(ws) + "\n", cfg, out);
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "index,num,den,h_power\n";
    for (size_t i = 0; i < ws.weights.size(); ++i)
      os << "a_" << i + 1 << "," << numerator_str(ws.weights[i].value) << ","
         << denominator_str(ws.weights[i].value) << "," << ws.weights[i].h_power << "\n";
    os << "error," << numerator_str(ws.error_coeff.value) << ","
       << denominator_str(ws.error_coeff.value) << "," << ws.error_coeff.h_power << "\n";
    emit(os.str(), cfg, out);
  } else {
    std::ostringstream os;
    os << "n = " << ws.n << ", degree of exactness = " << ws.degree << "\n";
    for (size_t i = 0; i < ws.weights.size(); ++i)
      os << "a_" << i + 1 << " = " << to_string(ws.weights[i].value) << "  (x h^"
         << ws.weights[i].h_power << ")\n";
    os << "error coefficient (" << (ws.odd() ? "odd" : "even")
       << ") = " << to_string(ws.error_coeff.value) << "  (x h^" << ws.error_coeff.h_power
       << ")\n";
    emit(os.str(), cfg, out);
  }
  return 0;
}

int cmd_gcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  warn_precision(cfg, err);
  Problem pr = make_problem(cfg);
  const int p = cfg.precision;
  const Rational h_rat = parse_rational(cfg.steps.at(0));
  if (h_rat <= 0) throw InputError("step must be positive");

  GCheckReport report =
      check_condition(pr.ast, Real::from_rational(pr.a, p), Real::from_rational(pr.b, p), cfg.n,
                      Real::from_rational(h_rat, p), cfg.grid_points, p);

  if (cfg.format == "json") {
    ordered_json j;
    j["n"] = report.n;
    j["h"] = fmt(report.h);
    j["grid_points"] = cfg.grid_points;
    j["min_g"] = report.min_g ? ordered_json(fmt(*report.min_g)) : ordered_json(nullptr);
    j["condition_holds"] = report.condition_holds;
    j["fprime_zero_suspected"] = report.fprime_zero_suspected;
    j["flagged_samples"] = report.flagged_samples;
    auto arr = ordered_json::array();
    for (const auto& s : report.samples) {
      ordered_json sj;
      sj["x"] = fmt(s.x);
      sj["g"] = s.g ? ordered_json(fmt(*s.g)) : ordered_json(nullptr);
      arr.push_back(std::move(sj));
    }
    j["samples"] = std::move(arr);
    emit(j.dump(2) + "\n", cfg, out);
  } else if (cfg.format == "csv") {
    emit(gcheck_csv(report), cfg, out);
  } else {
    std::ostringstream os;
    os << "n                  = " << report.n << "\n";
    os << "h                  = " << report.h.str() << "\n";
    os << "grid points        = " << cfg.grid_points << "\n";
    os << "min g              = " << (report.min_g ? report.min_g->str() : std::string("n/a"))
       << "\n";
    os << "g >= h             = " << (report.condition_holds ? "holds" : "fails") << "\n";
    os << "f' zero suspected  = " << (report.fprime_zero_suspected ? "yes" : "no") << "\n";
    os << "flagged samples    = " << report.flagged_samples << "\n";
    emit(os.str(), cfg, out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended left-rectangle quadrature with a-posteriori error estimates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string single_step;

  auto add_function_opts = [&](CLI::App* sub, bool step_multi) {
    sub->add_option("-f,--function", cfg.function_source, "integrand, e.g. \"1/ln(x)\"")
        ->required();
    sub->add_option("-a", cfg.a_text, "lower bound (decimal or p/q)")->required();
    sub->add_option("-b", cfg.b_text, "upper bound (decimal or p/q)")->required();
    sub->add_option("-n", cfg.n, "points per panel")->required()->check(CLI::Range(2, 200));
    sub->add_option("-p,--precision", cfg.precision, "working precision in decimal digits")
        ->check(CLI::Range(1, Real::kMaxDigits));
    if (step_multi)
      sub->add_option("--step", cfg.steps, "step h (decimal or p/q), repeatable");
    else
      sub->add_option("--step", single_step, "step h (decimal or p/q)");
    sub->add_option("--format", cfg.format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("-o,--output", cfg.output_path, "write output to a file");
  };

  CLI::App* integ = app.add_subcommand("integrate", "composite rule over [a, b]");
  add_function_opts(integ, false);
  integ->add_option("--panels", cfg.panels, "number of panels");
  integ->add_option("--reference", cfg.reference_text, "reference integral (decimal text)");
  integ->add_flag("--per-panel", cfg.per_panel, "include the per-panel breakdown");

  CLI::App* sweep = app.add_subcommand("sweep", "one composite run per step");
  add_function_opts(sweep, true);
  sweep->add_option("--reference", cfg.reference_text, "reference integral (decimal text)");

  CLI::App* weights = app.add_subcommand("weights", "exact weight table for one n");
  weights->add_option("-n", cfg.n, "points per panel")->required()->check(CLI::Range(2, 200));
  weights->add_option("--format", cfg.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  weights->add_option("-o,--output", cfg.output_path, "write output to a file");

  CLI::App* gcheck = app.add_subcommand("gcheck", "sample the validity function g on (a, b)");
  add_function_opts(gcheck, false);
  gcheck->add_option("--grid", cfg.grid_points, "grid points")->check(CLI::Range(2, 10000000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!single_step.empty()) cfg.steps = {single_step};

  try {
    if (app.got_subcommand(integ)) {
      cfg.subcommand = "integrate";
      if (cfg.panels.has_value() == !cfg.steps.empty())
        throw InputError("give exactly one of --panels and --step");
      return cmd_integrate(cfg, out, err);
    }
    if (app.got_subcommand(sweep)) {
      cfg.subcommand = "sweep";
      return cmd_sweep(cfg, out, err);
    }
    if (app.got_subcommand(weights)) {
      cfg.subcommand = "weights";
      return cmd_weights(cfg, out, err);
    }
    cfg.subcommand = "gcheck";
    if (cfg.steps.empty()) throw InputError("gcheck needs --step");
    return cmd_gcheck(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory (reduce the panel count or precision)\n";
    return 2;
  }
}

}  // namespace ncquad
