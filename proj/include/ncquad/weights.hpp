#pragma once

#include "ncquad/rational.hpp"

#include <string>
#include <vector>

namespace ncquad {

// A rational coefficient together with the power of the step h it carries.
struct HCoefficient {
  Rational value;
  int h_power = 0;
  bool operator==(const HCoefficient&) const = default;
};

// Exact weights of the extended rule on an n-point panel, in unit-step form.
// weights[i] carries the weight of the order-i divided difference: its real
// value is weights[i].value * h^(i+1). error_coeff is the ratio of Newton
// integrals that drives the a-posteriori error estimate: for n odd it is the
// degree-(n+1) over degree-1 ratio (h_power = n), for n even the degree-n over
// degree-1 ratio (h_power = n-1). All weights are strictly positive and the
// degree of exactness is n for odd n, n-1 for even n.
struct WeightSet {
  int n = 0;
  std::vector<HCoefficient> weights;
  HCoefficient error_coeff;
  int degree = 0;

  bool odd() const { return n % 2 != 0; }
};

// Derives the weight set for an n-point panel (n >= 2) by exact integration
// of the Newton basis over [0, n-1].
WeightSet compute_weights(int n);

// The three integrals of w_n over [0, n-1], [0, n] and [0, n-2], unit step.
struct NewtonIntegralTriple {
  Rational over_n_minus_1;
  Rational over_n;
  Rational over_n_minus_2;
};

NewtonIntegralTriple newton_integrals(int n);

// JSON rendering of a weight table:
// {"n": int, "weights": [{"num": str, "den": str, "h_power": int}, ...],
//  "error_coeff": {"num": str, "den": str, "h_power": int, "parity": str},
//  "degree": int}
std::string weights_to_json(const WeightSet& ws);

}  // namespace ncquad
