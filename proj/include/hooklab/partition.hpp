#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

/// Integer partition stored as weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. Zero padding is never stored; call
/// sites that need lambda_i for i > length pass n explicitly.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zeros; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 0-based i; zero beyond the last part.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int multiplicity(int value) const;

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Text form "3+1"; the empty partition prints as "0".
std::string to_string(const Partition& p);
/// Accepts "3+1", "3,1", "[3,1]", "0" and "" (empty partition).
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Finite multiset of exact values, stored sorted so that equality is
/// multiplicity-aware.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Rational> values);
  static Alphabet from_integers(std::span<const long> values);

  const std::vector<Rational>& values() const& { return values_; }
  std::vector<Rational> values() && { return std::move(values_); }
  std::size_t size() const { return values_.size(); }

  Alphabet squared() const;
  Alphabet negated() const;
  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);  // multiset union
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Rational> values_;
};

std::string to_string(const Alphabet& a);

/// Hook lengths {h_u : u in lambda}.
Alphabet hooks(const Partition& lambda);
/// Contents {j - i : (i, j) in lambda}, rows and columns 1-indexed.
Alphabet contents(const Partition& lambda);
/// {lambda_i + n - i : 1 <= i <= n}. Throws std::invalid_argument if n < length.
Alphabet shifted_parts(const Partition& lambda, int n);
/// {lambda_i - i : 1 <= i <= n}.
Alphabet parts_minus_index(const Partition& lambda, int n);
/// {lambda_i : 1 <= i <= n}, zero padded.
Alphabet padded_parts(const Partition& lambda, int n);

/// H_lambda, the product of all hook lengths.
Integer hook_product(const Partition& lambda);

/// f_lambda = n! / H_lambda.
Integer syt_count(const Partition& lambda);

/// Counts standard fillings one by one. Weight must be at most 12.
Integer syt_count_bruteforce(const Partition& lambda);
inline constexpr int kSytBruteforceMaxWeight = 12;

struct SkewShape {
  Partition outer;
  Partition inner;
  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer_shape, Partition inner_shape);
  int size() const { return outer.weight() - inner.weight(); }
};

bool contains(const Partition& outer, const Partition& inner);

/// f_{lambda/mu} = N! det[1/(lambda_i - mu_j - i + j)!] (Aitken), with 1/k! = 0 for k < 0.
Integer skew_syt_count(const SkewShape& shape);

/// Counts fillings of a skew shape explicitly. Size must be at most 12.
Integer skew_syt_count_bruteforce(const SkewShape& shape);

/// {h_u} + {lambda_i - lambda_j - i + j : i < j <= n} == {n + c_u} + {1^(n-1), ..., n-1}.
bool multiset_lemma_check(const Partition& lambda);

/// {b_1^(n-1), b_2^(n-2), ..., b_(n-1)} with b_i = i, or i^2 when squared.
Alphabet staircase_alphabet(int n, bool squared);

}  // namespace hooklab
