#pragma once

#include "ncquad/rational.hpp"

#include <vector>

namespace ncquad {

// Dense univariate polynomial with exact rational coefficients.
// coeffs()[i] is the coefficient of t^i; the zero polynomial stores no
// coefficients, so a nonzero polynomial always has a nonzero leading term.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 if zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& t) const;

  RationalPoly antiderivative() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  bool operator==(const RationalPoly&) const = default;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Newton basis elements w_0..w_n in unit-step form:
// w_0 = 1, w_j(t) = t (t-1) ... (t-(j-1)). Each w_j is monic of degree j and
// vanishes at t = 0..j-1. Throws for n < 1.
std::vector<RationalPoly> newton_basis(int n);

// Exact value of the integral of p over [lower, upper].
Rational integrate_poly(const RationalPoly& p, const Rational& lower, const Rational& upper);

}  // namespace ncquad
