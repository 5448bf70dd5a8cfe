#pragma once

#include <gmpxx.h>

#include <string>

namespace schur {

/// Exact arithmetic backends. Every computation in the library is exact;
/// no floating point is used anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);

/// Binomial coefficient C(n, k); zero outside the triangle.
Integer binomial(int n, int k);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& x);

/// Parses "p", "-p" or "p/q" (canonicalised). Throws ArgumentError otherwise.
Rational rational_from_string(const std::string& text);

/// Narrows an exact integer to long long, throwing ArgumentError on overflow.
long long to_int64(const Integer& x, const char* context);

}  // namespace schur
