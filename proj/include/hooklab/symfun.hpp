#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/poly.hpp"

namespace hooklab {

enum class Basis { m, e, h, p, s };

char basis_char(Basis b);

/// Alphabet slot identifier: one of 'x', 'y', 'z'.
using Slot = char;
inline constexpr std::string_view kSlots = "xyz";

struct BasisTerm {
  Basis basis;
  Partition index;
  Slot slot = 'x';

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
  friend std::strong_ordering operator<=>(const BasisTerm&, const BasisTerm&) = default;
};

/// Product of basis terms in canonical form: within a slot, all e-factors are
/// merged into one e_mu (parts concatenated and sorted), likewise h and p.
/// Schur and monomial factors are not multiplicative and stay separate.
/// Factors with an empty index equal 1 and are dropped.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<BasisTerm> factors);

  const std::vector<BasisTerm>& factors() const { return factors_; }
  int weight() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

 private:
  std::vector<BasisTerm> factors_;
};

/// Q-linear combination of monomials in basis terms over up to three
/// independent alphabets. Zero coefficients are never stored.
class SymExpr {
 public:
  SymExpr() = default;
  static SymExpr constant(const Rational& c);
  static SymExpr term(Basis basis, Partition index, Slot slot = 'x', const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree over all monomials.
  int weight() const;
  std::set<Slot> slots() const;

  SymExpr& operator+=(const SymExpr& rhs);
  SymExpr& operator-=(const SymExpr& rhs);
  SymExpr& operator*=(const Rational& c);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend SymExpr operator*(SymExpr a, const Rational& c) { return a *= c; }
  friend bool operator==(const SymExpr&, const SymExpr&) = default;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Grammar: terms separated by '+' or '-'; each term is a '*'-separated product
/// of factors, a factor being a rational ("3/2") or a basis term such as
/// "e[2,1](x)". The slot defaults to x when "(slot)" is omitted.
/// Throws std::invalid_argument on syntax errors.
SymExpr parse_symexpr(std::string_view text);
std::string to_string(const SymExpr& expr);

/// Caches e_k, h_k, p_k of one alphabet so that many basis terms can be
/// evaluated on it cheaply. Not safe for concurrent use; make one per thread.
class AlphabetEvaluator {
 public:
  explicit AlphabetEvaluator(const Alphabet& alphabet);

  Rational e(int k);
  Rational h(int k);
  Rational p(int k);
  /// Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
  Rational schur(const Partition& lambda);
  /// Sum over distinct rearrangements of the exponent vector. Nonzero
  /// alphabet values are limited to kMonomialMaxAlphabet.
  Rational monomial(const Partition& mu);
  Rational eval(Basis basis, const Partition& index);

 private:
  std::vector<Rational> values_;
  std::vector<Rational> elementary_;
  std::vector<Rational> complete_;
  std::vector<Rational> power_sums_;
};

inline constexpr std::size_t kMonomialMaxAlphabet = 12;

Rational eval_term(const BasisTerm& term, const Alphabet& alphabet);

using Assignment = std::map<Slot, Alphabet>;

/// Throws std::invalid_argument when a slot used by the expression is unassigned.
Rational eval_expr(const SymExpr& expr, const Assignment& assignment);

/// Character chi^lambda at cycle type mu (Murnaghan-Nakayama). Memoized;
/// safe to call from several threads. Throws std::invalid_argument if the
/// weights differ.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// Centralizer order 1^{m_1} m_1! 2^{m_2} m_2! ...
Integer z_mu(const Partition& mu);
/// (-1)^{|mu| - l(mu)}.
int sign_of_cycle_type(const Partition& mu);

/// A_lambda(v) = H_lambda^{-1} prod_{i=1..n} (v + lambda_i + n - i).
Poly a_poly(const Partition& lambda);
/// A_lambda(v) = sum_i binom(v+i-1, i) f_{lambda / 1^{n-i}}.
Poly a_poly_combinatorial(const Partition& lambda);

/// phi(p_mu) = (-1)^{n-l} sum_{i=0}^{m} binom(m, i) (v)_i with m = m_1(mu).
/// Throws std::invalid_argument for the empty partition.
Poly phi_p(const Partition& mu);
/// sum_{lambda |- n} chi^lambda(mu) A_lambda(v).
Poly phi_p_character_sum(const Partition& mu);

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

/// sum_lambda s_lambda(x) s_lambda(y)  vs  sum_mu z_mu^{-1} p_mu(x) p_mu(y).
IdentitySides cauchy_sides(int n, const Alphabet& x, const Alphabet& y);
bool cauchy_check(int n, const Alphabet& x, const Alphabet& y);

/// sum_lambda s_lambda(x) s_lambda'(y)  vs  sum_mu eps_mu z_mu^{-1} p_mu(x) p_mu(y).
IdentitySides dual_cauchy_sides(int n, const Alphabet& x, const Alphabet& y);
bool dual_cauchy_check(int n, const Alphabet& x, const Alphabet& y);

inline constexpr int kHkm2MaxN = 5;
inline constexpr int kHkm2MaxK = 3;

/// sum_lambda H^{k-2} prod_i s_lambda(x_i)  vs  (1/n!) sum_{w_1...w_k = 1} prod_i p_{rho(w_i)}(x_i),
/// the right side by summing over S_n^k. Requires 1 <= k <= 3, n <= 5 and
/// exactly k alphabets; throws std::out_of_range / std::invalid_argument.
IdentitySides hkm2_sides(int k, int n, std::span<const Alphabet> alphabets);
bool hkm2_check(int k, int n, std::span<const Alphabet> alphabets);

/// sum_i binom(v0+i-1, i) p_1^i e_{n-i}  vs  sum_lambda A_lambda(v0) s_lambda.
IdentitySides spid_sides(int n, const Rational& v0, const Alphabet& alphabet);
bool spid_check(int n, const Rational& v0, const Alphabet& alphabet);

}  // namespace hooklab
