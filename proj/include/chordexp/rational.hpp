#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chordexp {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
Rational power(const Rational& base, unsigned exponent);

}  // namespace chordexp
