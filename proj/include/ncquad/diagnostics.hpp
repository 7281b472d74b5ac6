#pragma once

#include "ncquad/expr.hpp"
#include "ncquad/weights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncquad {

// |f'(x)| too small at a sample point for the derivative ratios to be formed.
struct DerivativeNearZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GSample {
  Real x;
  std::optional<Real> g;  // absent when the sample was flagged
};

struct GCheckReport {
  int n = 0;
  Real h;
  std::vector<GSample> samples;
  std::optional<Real> min_g;     // over valid samples
  bool condition_holds = false;  // min_g >= h
  bool fprime_zero_suspected = false;
  size_t flagged_samples = 0;
};

// g(x,h) = |1 + sum_{j=2}^{n-1} (a_{j+1}/a_2) h^(j-1) f^(j)(x) / (j! f'(x))|,
// with the weight ratios taken from the weight set (powers of h reconstructed
// from the stored h_powers). Derivatives come from a jet of order n-1.
// Throws DerivativeNearZero when |f'(x)| < 10^(-precision+2) * max(1, |f(x)|).
Real g_function(const ExprAst& ast, const Real& x, const Real& h, const WeightSet& weights,
                int precision);

// Samples g on a uniform grid over the open interval (a, b), endpoints
// excluded, and reports the minimum and whether min >= h. Samples where f'
// is near zero (or the expression is undefined) are flagged, not fatal; a
// sign change of f' between neighbouring valid samples also raises
// fprime_zero_suspected.
GCheckReport check_condition(const ExprAst& ast, const Real& a, const Real& b, int n,
                             const Real& h, int grid_points, int precision);

// CSV of (x, g) pairs, one row per sample; flagged samples have an empty g.
std::string gcheck_csv(const GCheckReport& report);

}  // namespace ncquad
