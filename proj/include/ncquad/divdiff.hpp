#pragma once

#include "ncquad/real.hpp"

#include <functional>
#include <vector>

namespace ncquad {

using Integrand = std::function<Real(const Real&)>;

// f[x_1,...,x_{order+1}] by the forward recursion anchored at the first node:
// only the first order+1 (node, value) pairs participate. Nodes must be
// pairwise distinct; they need not be sorted or equally spaced.
// Throws std::invalid_argument for out-of-range order, mismatched lengths or
// coincident nodes ("degenerate panel").
Real divided_difference(const std::vector<Real>& nodes, const std::vector<Real>& values,
                        int order);

// Leading column of the full triangular table: entry j is
// divided_difference(nodes, values, j) for j = 0..n-1, computed in one O(n^2)
// pass.
std::vector<Real> leading_differences(const std::vector<Real>& nodes,
                                      const std::vector<Real>& values);

// n equally spaced, strictly increasing nodes with function values.
// Spacing is validated against h with relative tolerance 10^(-precision+2),
// scaled by the magnitude of the data (node rounding at the working precision
// must not trip the check).
struct Panel {
  std::vector<Real> x;
  std::vector<Real> y;
  Real h;
  int n = 0;
  int precision = Real::kDefaultDigits;

  static Panel make(std::vector<Real> x, std::vector<Real> y, Real h, int precision);
  // Convenience: infers h = x[1] - x[0].
  static Panel make(std::vector<Real> x, std::vector<Real> y, int precision);
};

// Entry j is the order-j divided difference anchored at the panel's first node.
std::vector<Real> full_table(const Panel& panel);

// Panel plus the midpoint nodes the error estimate needs: one midpoint of the
// first subinterval when n is even, additionally the midpoint of the last
// subinterval when n is odd.
struct ExtendedPanel {
  Panel base;
  std::vector<Real> mid_x;
  std::vector<Real> mid_y;

  static ExtendedPanel make(Panel base, const Integrand& f);
  static ExtendedPanel make_with_values(Panel base, std::vector<Real> mid_x,
                                        std::vector<Real> mid_y);
};

}  // namespace ncquad
