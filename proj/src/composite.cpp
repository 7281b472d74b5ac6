#include "ncquad/composite.hpp"

#include <cmath>
#include <stdexcept>

namespace ncquad {

CompositePlan plan(const Real& a, const Real& b, int n, long panel_count) {
  if (n < 2) throw std::invalid_argument("plan requires n >= 2");
  if (panel_count < 1) throw std::invalid_argument("plan requires at least one panel");
  if (!(b > a)) throw std::invalid_argument("plan requires b > a");

  CompositePlan pl;
  pl.precision = std::min(a.digits(), b.digits());
  pl.a = a;
  pl.b = b;
  pl.n = n;
  pl.panel_count = panel_count;
  pl.subintervals = static_cast<long>(n - 1) * panel_count;
  pl.h = (b - a) / pl.subintervals;
  pl.nodes.reserve(pl.subintervals + 1);
  for (long j = 0; j <= pl.subintervals; ++j) pl.nodes.push_back(a + pl.h * j);
  pl.nodes.back() = b;  // the partition covers [a, b] exactly
  return pl;
}

Real compensated_sum(const std::vector<Real>& values, int precision) {
  Real sum = Real::zero(precision);
  Real comp = Real::zero(precision);
  for (const Real& v : values) {
    Real t = sum + v;
    if (abs(sum) >= abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = std::move(t);
  }
  return sum + comp;
}

CompositeOutput integrate(const CompositePlan& plan, const Integrand& f, int precision) {
  const int n = plan.n;
  std::vector<Real> values;
  values.reserve(plan.nodes.size());
  for (const Real& x : plan.nodes) values.push_back(f(x.with_digits(precision)));

  CompositeOutput out;
  out.per_panel.reserve(plan.panel_count);
  std::vector<Real> qs, e_tildes, e_bars;
  qs.reserve(plan.panel_count);
  e_tildes.reserve(plan.panel_count);
  e_bars.reserve(plan.panel_count);

  const WeightSet weights = compute_weights(n);
  for (long k = 0; k < plan.panel_count; ++k) {
    const size_t base = static_cast<size_t>(k) * (n - 1);
    std::vector<Real> px(plan.nodes.begin() + base, plan.nodes.begin() + base + n);
    std::vector<Real> py(values.begin() + base, values.begin() + base + n);
    Panel panel = Panel::make(std::move(px), std::move(py), plan.h, precision);

    RuleOutput ro = simple_rule(panel, weights);
    ExtendedPanel ext = ExtendedPanel::make(panel, f);
    try {
      ro.e_bar = realistic_error(panel, ext, weights, ro.e_tilde);
      e_bars.push_back(*ro.e_bar);
    } catch (const EstimateUnreliable&) {
      out.failed_panels.push_back(static_cast<size_t>(k));
    }
    qs.push_back(ro.q);
    e_tildes.push_back(ro.e_tilde);
    out.per_panel.push_back(std::move(ro));
  }

  out.q = compensated_sum(qs, precision);
  out.e_tilde = compensated_sum(e_tildes, precision);
  out.s = out.q + out.e_tilde;
  if (out.failed_panels.empty()) out.e_bar = compensated_sum(e_bars, precision);
  return out;
}

std::vector<SweepRow> convergence_sweep(const Real& a, const Real& b, int n,
                                        const std::vector<Real>& steps, const Integrand& f,
                                        int precision, const std::optional<Real>& reference) {
  std::vector<SweepRow> rows;
  rows.reserve(steps.size());
  for (const Real& h : steps) {
    if (!(h.sign() > 0)) throw std::invalid_argument("sweep step must be positive");
    const Real ratio = (b - a) / (h * static_cast<long>(n - 1));
    const double rd = ratio.to_double();
    const long count = std::lround(rd);
    if (count < 1 || std::abs(rd - static_cast<double>(count)) > 1e-9 * std::max(1.0, rd))
      throw std::invalid_argument("step does not divide [a, b] into whole panels");
    CompositePlan pl = plan(a.with_digits(precision), b.with_digits(precision), n, count);
    SweepRow row{pl.h, count, integrate(pl, f, precision), std::nullopt};
    if (reference) row.e_true = *reference - row.out.s;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ncquad
