#pragma once

#include "ncquad/rules.hpp"

#include <optional>
#include <vector>

namespace ncquad {

// Partition of [a, b] into `panel_count` panels of n points each, consecutive
// panels sharing one endpoint: N = (n-1) * panel_count subintervals, N+1 nodes
// with nodes.front() = a and nodes.back() = b.
struct CompositePlan {
  Real a;
  Real b;
  int n = 0;
  long panel_count = 0;
  long subintervals = 0;  // N
  Real h;
  std::vector<Real> nodes;  // N+1 entries
  int precision = Real::kDefaultDigits;
};

CompositePlan plan(const Real& a, const Real& b, int n, long panel_count);

// Sums of the per-panel outputs; s = q + e_tilde. e_bar is only present when
// every panel produced an estimate; failed_panels lists the 0-based indices of
// the panels whose estimate was unreliable.
struct CompositeOutput {
  Real q;
  Real e_tilde;
  Real s;
  std::optional<Real> e_bar;
  std::vector<RuleOutput> per_panel;
  std::vector<size_t> failed_panels;

  bool e_bar_valid() const { return failed_panels.empty(); }
};

// Applies the simple rule and the error estimate to every panel and sums the
// four outputs. Function evaluations: one per node plus one or two fresh
// midpoint evaluations per panel.
CompositeOutput integrate(const CompositePlan& plan, const Integrand& f, int precision);

struct SweepRow {
  Real h;
  long panel_count = 0;
  CompositeOutput out;
  std::optional<Real> e_true;  // reference - s, when a reference was given
};

// One composite run per step over the fixed interval [a, b]. Each h must
// divide the interval into a whole number of panels, i.e. (b-a)/((n-1)h) must
// be a positive integer (within rounding); otherwise std::invalid_argument.
std::vector<SweepRow> convergence_sweep(const Real& a, const Real& b, int n,
                                        const std::vector<Real>& steps, const Integrand& f,
                                        int precision,
                                        const std::optional<Real>& reference = std::nullopt);

// Neumaier-compensated sum; the aggregates above are formed with it.
Real compensated_sum(const std::vector<Real>& values, int precision);

}  // namespace ncquad
