#include "spinchain/rational.hpp"

#include <algorithm>
#include <cctype>

#include "spinchain/error.hpp"

namespace spinchain {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

/// Boost reads a leading 0 as an octal prefix; decimal digit strings must not have one.
Integer from_decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Rational make_canonical(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw ValidationError("zero denominator");
  }
  Rational q(num, den);
  mpq_canonicalize(q.backend().data());
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw ValidationError("not a rational: '" + original + "'");
  }

  Integer num;
  Integer den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw ValidationError("not a rational: '" + original + "'");
    }
    num = from_decimal_digits(p);
    den = from_decimal_digits(q);
  } else {
    const auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ValidationError("not a rational: '" + original + "'");
    }
    num = from_decimal_digits(std::string(whole) + std::string(frac));
    den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
  }
  return make_canonical(negative ? Integer(-num) : num, den);
}

std::string to_string(const Rational& value) {
  if (is_integer(value)) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

Integer binomial(long a, long b) {
  if (b < 0 || b > a) {
    return 0;
  }
  Integer result = 1;
  b = std::min(b, a - b);
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Rational power(const Rational& base, unsigned exponent) {
  return Rational(boost::multiprecision::pow(Integer(boost::multiprecision::numerator(base)), exponent),
                  boost::multiprecision::pow(Integer(boost::multiprecision::denominator(base)), exponent));
}

}  // namespace spinchain
