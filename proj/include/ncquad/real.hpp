#pragma once

#include "ncquad/rational.hpp"

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ncquad {

// Configurable-precision floating-point value. Precision is counted in
// decimal digits and fixed per value; arithmetic between two Reals is carried
// out at the minimum of the operands' precisions. Values are immutable in
// spirit: every operation returns a fresh Real.
class Real {
 public:
  static constexpr int kDefaultDigits = 16;  // machine-double equivalent
  static constexpr int kMaxDigits = 100000;

  Real() : Real(kDefaultDigits) {}               // NaN at default precision
  explicit Real(int digits);                     // NaN at the given precision
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_double(double v, int digits = kDefaultDigits);
  static Real from_long(long v, int digits = kDefaultDigits);
  static Real from_rational(const Rational& q, int digits);
  // Parses decimal text ("8406.24", "-5.98540e-17") at the given precision.
  // Throws std::invalid_argument unless the whole string is a number.
  static Real parse(std::string_view text, int digits);
  static Real zero(int digits);
  static Real pow10(int exponent, int digits);  // 10^exponent
  static Real pi(int digits);
  static Real euler_gamma(int digits);

  int digits() const { return digits_; }
  // Same value re-rounded to a new working precision.
  Real with_digits(int digits) const;

  bool is_nan() const;
  bool is_finite() const;
  bool is_zero() const;
  int sign() const;  // -1, 0, +1 (0 for NaN)

  double to_double() const;
  // Exact rational value of the underlying binary float (finite values only).
  Rational exact_rational() const;

  // Decimal rendering with the given number of significant digits, fixed or
  // scientific following the usual %g cutover, trailing zeros trimmed.
  std::string str(int significant) const;
  std::string str() const { return str(digits_); }
  // Enough digits for an exact binary round trip at this precision.
  std::string str_roundtrip() const;

  // Decimal normalization v = ±0.d1d2... × 10^(-k): writes k and the leading
  // (truncated) mantissa digit d1. Requires a finite nonzero value.
  void decimal_parts(long& k, int& leading_digit) const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  friend bool operator==(const Real& a, const Real& b);
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b);
  friend bool operator<=(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b);
  friend bool operator>=(const Real& a, const Real& b);

  friend double ulps_between(const Real& a, const Real& b);
  friend Real abs(const Real& a);
  friend Real sqrt(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real sin(const Real& a);
  friend Real cos(const Real& a);
  friend Real erf(const Real& a);
  Real pow_int(long exponent) const;

  static mpfr_prec_t bits_for(int digits);

 private:
  mpfr_t v_;
  int digits_;
};

// |a-b| measured in units in the last place of the larger-magnitude operand,
// at that operand's working precision. 0 when bit-identical; +inf when only
// one of the two is NaN.
double ulps_between(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& v);

}  // namespace ncquad
