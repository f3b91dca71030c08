#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modhodge {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; use makeRational/parseRational to build
/// values from a numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational makeRational(long numerator, long denominator = 1);

/// Accepts `p` or `p/q` with optional leading sign. Throws ParseError.
Rational parseRational(std::string_view text);

std::string toString(const Rational& value);

}  // namespace modhodge
