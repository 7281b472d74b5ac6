#include "ncquad/diagnostics.hpp"

#include <sstream>

namespace ncquad {

namespace {

Real g_from_jet(const TaylorJet& jet, const Real& h, const WeightSet& weights, int p) {
  const Real& slope = jet.coefficients[1];
  Real acc = Real::from_long(1, p);
  for (int j = 2; j <= weights.n - 1; ++j) {
    // a_{j+1}/a_2 contributes its rational part times h^(j-1).
    const Rational ratio = weights.weights[j].value / weights.weights[1].value;
    const int h_power = weights.weights[j].h_power - weights.weights[1].h_power;
    // f^(j)/(j! f') = c_j / c_1
    acc += Real::from_rational(ratio, p) * h.pow_int(h_power) * (jet.coefficients[j] / slope);
  }
  return abs(acc);
}

bool slope_usable(const TaylorJet& jet, int p) {
  Real scale = abs(jet.coefficients[0]);
  const Real one = Real::from_long(1, p);
  if (scale < one) scale = one;
  return !(abs(jet.coefficients[1]) < Real::pow10(-p + 2, p) * scale);
}

}  // namespace

Real g_function(const ExprAst& ast, const Real& x, const Real& h, const WeightSet& weights,
                int precision) {
  TaylorJet jet = jet_eval(ast, x, weights.n - 1, precision);
  if (!slope_usable(jet, precision))
    throw DerivativeNearZero("f' vanishes at the sample point");
  return g_from_jet(jet, h, weights, precision);
}

GCheckReport check_condition(const ExprAst& ast, const Real& a, const Real& b, int n,
                             const Real& h, int grid_points, int precision) {
  if (grid_points < 2) throw std::invalid_argument("check_condition requires grid_points >= 2");
  const WeightSet weights = compute_weights(n);
  const int p = precision;

  GCheckReport report;
  report.n = n;
  report.h = h.with_digits(p);

  const Real step = (b - a) / static_cast<long>(grid_points + 1);
  int last_sign = 0;
  for (int i = 1; i <= grid_points; ++i) {
    Real x = a + step * static_cast<long>(i);
    std::optional<Real> g;
    try {
      TaylorJet jet = jet_eval(ast, x, n - 1, p);
      if (slope_usable(jet, p)) {
        g = g_from_jet(jet, h, weights, p);
        const int s = jet.coefficients[1].sign();
        if (last_sign != 0 && s != 0 && s != last_sign) report.fprime_zero_suspected = true;
        if (s != 0) last_sign = s;
      }
    } catch (const EvalError&) {
      // undefined sample: flagged below
    }
    if (!g) {
      ++report.flagged_samples;
      report.fprime_zero_suspected = true;
    } else if (!report.min_g || *g < *report.min_g) {
      report.min_g = *g;
    }
    report.samples.push_back(GSample{std::move(x), std::move(g)});
  }
  report.condition_holds = report.min_g.has_value() && *report.min_g >= report.h;
  return report;
}

std::string gcheck_csv(const GCheckReport& report) {
  std::ostringstream os;
  os << "x,g\n";
  for (const auto& s : report.samples) {
    os << s.x.str_roundtrip() << ",";
    if (s.g) os << s.g->str_roundtrip();
    os << "\n";
  }
  return os.str();
}

}  // namespace ncquad
