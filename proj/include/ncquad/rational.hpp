#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncquad {

using Integer = mpz_class;

// Exact rational number; canonical form (positive denominator, reduced)
// is maintained by every operation.
using Rational = mpq_class;

// num/den, canonicalized.
Rational make_rational(long num, long den = 1);

// Exact rational from decimal or fraction text: "123", "-4.25", "1e5",
// "2.5e-3", "5/3". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

std::string to_string(const Rational& q);  // "n" or "n/d"
std::string numerator_str(const Rational& q);
std::string denominator_str(const Rational& q);

}  // namespace ncquad
