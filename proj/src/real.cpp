#include "ncquad/real.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ncquad {

namespace {

int checked_digits(int digits) {
  if (digits < 1 || digits > Real::kMaxDigits)
    throw std::invalid_argument("precision must be between 1 and 100000 decimal digits");
  return digits;
}

}  // namespace

mpfr_prec_t Real::bits_for(int digits) {
  // ceil(digits * log2(10))
  auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626));
  return std::max<mpfr_prec_t>(MPFR_PREC_MIN, bits);
}

Real::Real(int digits) : digits_(checked_digits(digits)) { mpfr_init2(v_, bits_for(digits_)); }

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_double(double v, int digits) {
  Real r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_long(long v, int digits) {
  Real r(digits);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_rational(const Rational& q, int digits) {
  Real r(digits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, int digits) {
  Real r(digits);
  std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return r;
}

Real Real::zero(int digits) {
  Real r(digits);
  mpfr_set_zero(r.v_, 1);
  return r;
}

Real Real::pow10(int exponent, int digits) {
  Real r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

Real Real::pi(int digits) {
  Real r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(int digits) {
  Real r(digits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

Real Real::with_digits(int digits) const {
  Real r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

bool Real::is_nan() const { return mpfr_nan_p(v_) != 0; }
bool Real::is_finite() const { return mpfr_number_p(v_) != 0; }
bool Real::is_zero() const { return mpfr_zero_p(v_) != 0; }

int Real::sign() const {
  if (is_nan() || is_zero()) return 0;
  return mpfr_sgn(v_) > 0 ? 1 : -1;
}

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

Rational Real::exact_rational() const {
  if (!is_finite()) throw std::domain_error("exact_rational of a non-finite value");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Real::str(int significant) const {
  if (is_nan()) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  significant = std::max(2, significant);

  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);

  size_t last = m.find_last_not_of('0');
  m.erase(last == std::string::npos ? 1 : last + 1);

  // value = 0.m × 10^e, i.e. m[0].m[1..] × 10^(e-1)
  const long x = static_cast<long>(e) - 1;
  std::string out;
  if (x < -4 || x >= significant) {
    out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(x);
  } else if (x >= 0) {
    std::string intpart = m.substr(0, std::min<size_t>(m.size(), x + 1));
    while (static_cast<long>(intpart.size()) < x + 1) intpart += '0';
    std::string frac = m.size() > static_cast<size_t>(x + 1) ? m.substr(x + 1) : "";
    out = intpart + (frac.empty() ? "" : "." + frac);
  } else {
    out = "0." + std::string(-x - 1, '0') + m;
  }
  return neg ? "-" + out : out;
}

std::string Real::str_roundtrip() const {
  const auto bits = mpfr_get_prec(v_);
  return str(static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 2);
}

void Real::decimal_parts(long& k, int& leading_digit) const {
  if (!is_finite() || is_zero())
    throw std::domain_error("decimal_parts requires a finite nonzero value");
  mpfr_exp_t e;
  // Truncation keeps the leading digit of the exact decimal expansion.
  char* raw = mpfr_get_str(nullptr, &e, 10, 3, v_, MPFR_RNDZ);
  std::string m(raw);
  mpfr_free_str(raw);
  if (!m.empty() && m[0] == '-') m.erase(0, 1);
  k = -static_cast<long>(e);
  leading_digit = m.empty() ? 0 : m[0] - '0';
}

#define NCQUAD_REAL_BINOP(op, fn)                              \
  Real operator op(const Real& a, const Real& b) {             \
    Real r(std::min(a.digits_, b.digits_));                    \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
    return r;                                                  \
  }

NCQUAD_REAL_BINOP(+, mpfr_add)
NCQUAD_REAL_BINOP(-, mpfr_sub)
NCQUAD_REAL_BINOP(*, mpfr_mul)
NCQUAD_REAL_BINOP(/, mpfr_div)
#undef NCQUAD_REAL_BINOP

Real operator*(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.digits_);
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.digits_);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

#define NCQUAD_REAL_UNFN(name, fn)  \
  Real name(const Real& a) {        \
    Real r(a.digits_);              \
    fn(r.v_, a.v_, MPFR_RNDN);      \
    return r;                       \
  }

NCQUAD_REAL_UNFN(abs, mpfr_abs)
NCQUAD_REAL_UNFN(sqrt, mpfr_sqrt)
NCQUAD_REAL_UNFN(exp, mpfr_exp)
NCQUAD_REAL_UNFN(log, mpfr_log)
NCQUAD_REAL_UNFN(sin, mpfr_sin)
NCQUAD_REAL_UNFN(cos, mpfr_cos)
NCQUAD_REAL_UNFN(erf, mpfr_erf)
#undef NCQUAD_REAL_UNFN

Real Real::pow_int(long exponent) const {
  Real r(digits_);
  mpfr_pow_si(r.v_, v_, exponent, MPFR_RNDN);
  return r;
}

double ulps_between(const Real& a, const Real& b) {
  if (a.is_nan() && b.is_nan()) return 0.0;
  if (a.is_nan() || b.is_nan()) return std::numeric_limits<double>::infinity();
  if (a == b) return 0.0;
  const Real& ref = abs(a) >= abs(b) ? a : b;
  Real diff = abs(a - b);
  if (ref.is_zero() || !diff.is_finite()) return std::numeric_limits<double>::infinity();
  // ulp(ref) = 2^(exp - prec) with |ref| in [2^(exp-1), 2^exp)
  mpfr_exp_t e = mpfr_get_exp(ref.v_);
  mpfr_prec_t prec = mpfr_get_prec(ref.v_);
  mpfr_mul_2si(diff.v_, diff.v_, static_cast<long>(prec) - static_cast<long>(e), MPFR_RNDN);
  return diff.to_double();
}

std::ostream& operator<<(std::ostream& os, const Real& v) { return os << v.str(); }

}  // namespace ncquad
