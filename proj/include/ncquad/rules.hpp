#pragma once

#include "ncquad/divdiff.hpp"
#include "ncquad/weights.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ncquad {

// Raised when the first-order divided difference is too small for the error
// ratio to mean anything. Callers may catch it and report S without an
// estimate.
struct EstimateUnreliable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The output quadruple of one panel. s = q + e_tilde and e_tilde is the sum
// of the correction terms, both exactly as computed here.
struct RuleOutput {
  Real q;                              // left-rectangle value
  std::vector<Real> correction_terms;  // term j-1 = weight_{j+1} * dd_j, j = 1..n-1
  Real e_tilde;                        // their sum
  Real s;                              // q + e_tilde
  std::optional<Real> e_bar;           // a-posteriori estimate, when available
  int degree = 0;
};

// Left-rectangle value plus divided-difference corrections; e_bar is left
// empty. Throws std::invalid_argument when panel and weights disagree on n.
RuleOutput simple_rule(const Panel& panel, const WeightSet& weights);

// A-posteriori estimate from the extended panel: the error-coefficient ratio
// times h^p, times the ratio of the high-order divided difference over the
// node list [x_1..x_n, midpoints...] to f[x_1,x_2] of the original panel,
// times e_tilde. A vanishing high-order difference yields exactly zero;
// otherwise |f[x_1,x_2]| below 10^(-precision+2) * max|y| raises
// EstimateUnreliable.
Real realistic_error(const Panel& panel, const ExtendedPanel& extended, const WeightSet& weights,
                     const Real& e_tilde);

// First-derivative error bound for the left-rectangle value:
// (n-1)^2 h^2 / 2 * fprime_bound. Diagnostic only.
Real theoretical_error_qn(const Panel& panel, const Real& fprime_bound);

// True when the estimate has the sign of the true error, the same decimal
// exponent in the normalized form ±0.d1d2...×10^(-k), and a leading mantissa
// digit within one unit. Leading digits 9 and 1 at adjacent exponents are
// compared after renormalizing to the larger exponent.
bool is_realistic(const Real& estimate, const Real& true_error);

}  // namespace ncquad
