#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bethe {

using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal like "-1.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& value);

Rational binomial(long n, long k);
Rational factorial(long n);
Rational power(const Rational& base, long exponent);

}  // namespace bethe
