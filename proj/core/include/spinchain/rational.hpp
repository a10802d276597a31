#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace spinchain {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "7", "-3/4", "1.25" or "-.5" into a canonical rational.
/// Throws ValidationError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// C(a, b) with C(a, b) = 0 whenever b < 0 or b > a.
Integer binomial(long a, long b);

bool is_integer(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

}  // namespace spinchain
