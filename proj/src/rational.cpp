#include "ncquad/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace ncquad {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10q(long k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(k < 0 ? -k : k));
  Rational q(p);
  if (k < 0) q = 1 / q;
  return q;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) bad(text);

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      neg = num[0] == '-';
      num.erase(0, 1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(text);
    Integer den_z{den, 10};  // explicit base: a leading zero must not mean octal
    if (den_z == 0) bad(text);
    Rational q{Integer(num, 10), den_z};
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) bad(text);
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad(text);
    std::string e;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
    exponent = std::strtol(e.c_str(), nullptr, 10);
    if (eneg) exponent = -exponent;
  }
  if (i != s.size()) bad(text);

  if (digits.empty()) digits = "0";
  Rational q{Integer(digits, 10)};
  q *= pow10q(exponent - frac_digits);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string numerator_str(const Rational& q) { return q.get_num().get_str(); }

std::string denominator_str(const Rational& q) { return q.get_den().get_str(); }

}  // namespace ncquad
