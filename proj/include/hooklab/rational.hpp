#pragma once

// Exact integers and rationals. GMP's mpq_class keeps every value produced by
// arithmetic in lowest terms with a positive denominator; the helpers below
// preserve that for values built from text or from numerator/denominator pairs.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hooklab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& q);

Integer factorial(unsigned long n);

/// C(n, k) for integer n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Generalized binomial x(x-1)...(x-k+1)/k!.
Rational binomial(const Rational& x, unsigned long k);

/// base^exponent, negative exponents allowed for nonzero base.
Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

}  // namespace hooklab
