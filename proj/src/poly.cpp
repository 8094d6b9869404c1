#include "hooklab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hooklab {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Rational Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial division by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string to_string(const Poly& p, char variable) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << variable;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly power(const Poly& p, unsigned k) {
  Poly r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

Poly falling_factorial(unsigned r) {
  Poly out = 1;
  for (unsigned i = 0; i < r; ++i) out *= Poly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
  return out;
}

Rational falling_factorial(const Rational& x, unsigned r) {
  Rational out = 1;
  for (unsigned i = 0; i < r; ++i) out *= x - Rational(static_cast<long>(i));
  return out;
}

Poly rising_factorial(unsigned i) {
  Poly out = 1;
  for (unsigned k = 0; k < i; ++k) out *= Poly(std::vector<Rational>{Rational(static_cast<long>(k)), Rational(1)});
  return out;
}

Poly multiset_binomial(unsigned i) { return rising_factorial(i) / Rational(factorial(i)); }

Poly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("lagrange_interpolate: duplicate abscissa " + to_string(points[i].first));
      }
    }
  }
  Poly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].second == 0) continue;
    Poly basis = 1;
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= Poly(std::vector<Rational>{-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    result += basis * (points[i].second / denom);
  }
  return result;
}

}  // namespace hooklab
