#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Dense univariate polynomial over Q, lowest degree first. Trailing zero
/// coefficients are stripped on every mutation, so the zero polynomial has an
/// empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const& { return coeffs_; }
  std::vector<Rational> coefficients() && { return std::move(coeffs_); }
  Rational coefficient(std::size_t k) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Human-readable form such as "3/2*n^2 - 1/2*n".
std::string to_string(const Poly& p, char variable = 'n');

/// Polynomial p(x)^k.
Poly power(const Poly& p, unsigned k);

/// <x>_r = x(x-1)...(x-r+1) as a polynomial in x.
Poly falling_factorial(unsigned r);
Rational falling_factorial(const Rational& x, unsigned r);

/// (v)_i = v(v+1)...(v+i-1).
Poly rising_factorial(unsigned i);

/// binom(v+i-1, i) = (v)_i / i! as a polynomial in v.
Poly multiset_binomial(unsigned i);

/// Classical Lagrange interpolation through the given points. Throws
/// std::invalid_argument on a repeated abscissa.
Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace hooklab
