#include "ncquad/rules.hpp"

namespace ncquad {

RuleOutput simple_rule(const Panel& panel, const WeightSet& weights) {
  if (panel.n != weights.n)
    throw std::invalid_argument("panel size does not match weight set");
  const int p = panel.precision;
  const std::vector<Real> dd = full_table(panel);

  RuleOutput out;
  out.degree = weights.degree;
  out.q = Real::from_rational(weights.weights[0].value, p) * panel.h * panel.y[0];
  out.correction_terms.reserve(panel.n - 1);
  Real sum = Real::zero(p);
  for (int j = 1; j < panel.n; ++j) {
    const auto& w = weights.weights[j];
    Real term = Real::from_rational(w.value, p) * panel.h.pow_int(w.h_power) * dd[j];
    sum += term;
    out.correction_terms.push_back(std::move(term));
  }
  out.e_tilde = std::move(sum);
  out.s = out.q + out.e_tilde;
  return out;
}

Real realistic_error(const Panel& panel, const ExtendedPanel& extended, const WeightSet& weights,
                     const Real& e_tilde) {
  if (panel.n != weights.n)
    throw std::invalid_argument("panel size does not match weight set");
  if (extended.base.n != panel.n)
    throw std::invalid_argument("extended panel does not match panel");
  const int p = panel.precision;

  // Node ordering: the base panel first, midpoints appended.
  std::vector<Real> nodes = panel.x;
  nodes.insert(nodes.end(), extended.mid_x.begin(), extended.mid_x.end());
  std::vector<Real> values = panel.y;
  values.insert(values.end(), extended.mid_y.begin(), extended.mid_y.end());

  const int order = weights.odd() ? panel.n + 1 : panel.n;
  const Real high_order = divided_difference(nodes, values, order);
  if (high_order.is_zero()) return Real::zero(p);  // estimate vanishes with the numerator

  const Real first_order = (panel.y[1] - panel.y[0]) / (panel.x[1] - panel.x[0]);
  Real max_y = Real::zero(p);
  for (const Real& y : panel.y)
    if (abs(y) > max_y) max_y = abs(y);
  if (abs(first_order) < Real::pow10(-p + 2, p) * max_y)
    throw EstimateUnreliable("first-derivative proxy vanishes; estimate unreliable");

  const Real coeff = Real::from_rational(weights.error_coeff.value, p) *
                     panel.h.pow_int(weights.error_coeff.h_power);
  return coeff * (high_order / first_order) * e_tilde;
}

Real theoretical_error_qn(const Panel& panel, const Real& fprime_bound) {
  const long span = panel.n - 1;
  return panel.h * panel.h * (span * span) / 2 * fprime_bound;
}

bool is_realistic(const Real& estimate, const Real& true_error) {
  if (!estimate.is_finite() || !true_error.is_finite()) return false;
  const int se = estimate.sign();
  const int st = true_error.sign();
  if (st == 0) return se == 0;
  if (se != st) return false;

  long ke = 0, kt = 0;
  int de = 0, dt = 0;
  estimate.decimal_parts(ke, de);
  true_error.decimal_parts(kt, dt);

  if (ke == kt) return std::abs(de - dt) <= 1;
  if (std::labs(ke - kt) == 1) {
    // e.g. 0.95e-3 vs 0.105e-2: renormalized to the larger exponent the
    // smaller value leads with digit 0, one unit away from 1.
    const int d_small = ke > kt ? de : dt;  // larger k = smaller magnitude
    const int d_large = ke > kt ? dt : de;
    return d_small == 9 && d_large == 1;
  }
  return false;
}

}  // namespace ncquad
