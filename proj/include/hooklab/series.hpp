#pragma once

#include <vector>

#include "hooklab/poly.hpp"

namespace hooklab {

/// Power series in x truncated after x^N, with coefficients in Q[t].
class Series {
 public:
  explicit Series(unsigned truncation = 0);
  /// Extra coefficients beyond x^N are dropped; missing ones are zero.
  Series(unsigned truncation, std::vector<Poly> coefficients);

  static Series one(unsigned truncation);
  /// Series whose coefficients are the constants given (lowest order first).
  static Series from_rationals(unsigned truncation, const std::vector<Rational>& coefficients);

  unsigned truncation() const { return truncation_; }
  const Poly& operator[](std::size_t n) const { return coeffs_[n]; }
  Poly& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<Poly>& coefficients() const& { return coeffs_; }
  std::vector<Poly> coefficients() && { return std::move(coeffs_); }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  unsigned truncation_;
  std::vector<Poly> coeffs_;
};

/// Product truncated at the smaller of the two orders.
Series series_mul(const Series& a, const Series& b);

/// log(S) for S with constant term 1. Throws std::domain_error otherwise.
Series series_log(const Series& s);

/// exp(S) for S with constant term 0. Throws std::domain_error otherwise.
Series series_exp(const Series& s);

/// S^(a + b t) = exp((a + b t) log S) for S with constant term 1.
Series series_pow_affine_t(const Series& base, const Rational& a, const Rational& b);

/// S^alpha for rational alpha via the recurrence n P_n = sum_k ((alpha+1)k - n) S_k P_{n-k}.
/// Shares no code with series_log / series_exp.
Series series_pow(const Series& base, const Rational& alpha);

/// Substitutes t = t0 into every coefficient.
Series specialize_t(const Series& s, const Rational& t0);

}  // namespace hooklab
