#include "ncquad/rational_poly.hpp"

#include <stdexcept>

namespace ncquad {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::variable() {
  return RationalPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational RationalPoly::leading() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return RationalPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return RationalPoly(std::move(out));
}

std::vector<RationalPoly> newton_basis(int n) {
  if (n < 1) throw std::invalid_argument("newton_basis requires n >= 1");
  std::vector<RationalPoly> w;
  w.reserve(n + 1);
  w.push_back(RationalPoly::constant(Rational(1)));
  const RationalPoly t = RationalPoly::variable();
  for (int j = 1; j <= n; ++j) {
    // w_j = w_{j-1} * (t - (j-1))
    RationalPoly shift = t - RationalPoly::constant(Rational(j - 1));
    w.push_back(w.back() * shift);
  }
  return w;
}

Rational integrate_poly(const RationalPoly& p, const Rational& lower, const Rational& upper) {
  RationalPoly anti = p.antiderivative();
  return anti(upper) - anti(lower);
}

}  // namespace ncquad
