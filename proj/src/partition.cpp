#include "hooklab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hooklab/detail/determinant.hpp"

namespace hooklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw std::invalid_argument("partition parts must be nonnegative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += '+';
    out += std::to_string(p.part(i));
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += c == ',' ? '+' : c;
  }
  std::vector<int> parts;
  if (cleaned.empty() || cleaned == "0") return {};
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    const auto end = std::min(cleaned.find('+', start), cleaned.size());
    const std::string token = cleaned.substr(start, end - start);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(token));
    start = end + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::vector<Rational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

Alphabet Alphabet::from_integers(std::span<const long> values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return Alphabet(std::move(v));
}

Alphabet Alphabet::squared() const {
  std::vector<Rational> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.emplace_back(x * x);
  return Alphabet(std::move(v));
}

Alphabet Alphabet::negated() const {
  std::vector<Rational> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.emplace_back(-x);
  return Alphabet(std::move(v));
}

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  std::vector<Rational> v = a.values_;
  v.insert(v.end(), b.values_.begin(), b.values_.end());
  return Alphabet(std::move(v));
}

std::string to_string(const Alphabet& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += to_string(a.values()[i]);
  }
  return out + "}";
}

namespace {

std::vector<long> hook_values(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(lambda.weight()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) out.push_back(lambda.part(i) - j + conj.part(j) - i - 1);
  }
  return out;
}

std::vector<long> content_values(const Partition& lambda) {
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(lambda.weight()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) out.push_back(j - i);
  }
  return out;
}

void require_padding(const Partition& lambda, int n) {
  if (n < lambda.length()) {
    throw std::invalid_argument("n=" + std::to_string(n) + " is smaller than the number of parts of " + to_string(lambda));
  }
}

}  // namespace

Alphabet hooks(const Partition& lambda) { return Alphabet::from_integers(hook_values(lambda)); }

Alphabet contents(const Partition& lambda) { return Alphabet::from_integers(content_values(lambda)); }

Alphabet shifted_parts(const Partition& lambda, int n) {
  require_padding(lambda, n);
  std::vector<long> v;
  for (int i = 1; i <= n; ++i) v.push_back(lambda.part(i - 1) + n - i);
  return Alphabet::from_integers(v);
}

Alphabet parts_minus_index(const Partition& lambda, int n) {
  require_padding(lambda, n);
  std::vector<long> v;
  for (int i = 1; i <= n; ++i) v.push_back(lambda.part(i - 1) - i);
  return Alphabet::from_integers(v);
}

Alphabet padded_parts(const Partition& lambda, int n) {
  require_padding(lambda, n);
  std::vector<long> v;
  for (int i = 1; i <= n; ++i) v.push_back(lambda.part(i - 1));
  return Alphabet::from_integers(v);
}

Integer hook_product(const Partition& lambda) {
  Integer h = 1;
  for (long x : hook_values(lambda)) h *= x;
  return h;
}

Integer syt_count(const Partition& lambda) {
  const Integer num = factorial(static_cast<unsigned long>(lambda.weight()));
  const Integer den = hook_product(lambda);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(outer, inner)) {
    throw std::invalid_argument("skew shape " + to_string(outer) + "/" + to_string(inner) + ": inner not contained in outer");
  }
}

Integer skew_syt_count(const SkewShape& shape) {
  const int rows = shape.outer.length();
  detail::RationalMatrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(rows)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      const int k = shape.outer.part(i) - shape.inner.part(j) - i + j;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          k < 0 ? Rational(0) : Rational(Integer(1), factorial(static_cast<unsigned long>(k)));
    }
  }
  const Rational value = detail::determinant(std::move(m)) * Rational(factorial(static_cast<unsigned long>(shape.size())));
  if (!is_integer(value)) throw std::logic_error("Aitken determinant produced a non-integer");
  return value.get_num();
}

namespace {

// Adds cells one at a time; every completed path is one standard filling.
Integer count_fillings(std::vector<int>& current, const Partition& outer, int remaining) {
  if (remaining == 0) return 1;
  Integer total = 0;
  for (int i = 0; i < outer.length(); ++i) {
    const auto row = static_cast<std::size_t>(i);
    if (current[row] >= outer.part(i)) continue;
    if (i > 0 && current[row - 1] <= current[row]) continue;
    ++current[row];
    total += count_fillings(current, outer, remaining - 1);
    --current[row];
  }
  return total;
}

}  // namespace

Integer skew_syt_count_bruteforce(const SkewShape& shape) {
  if (shape.size() > kSytBruteforceMaxWeight) {
    throw std::length_error("brute-force SYT enumeration is limited to " + std::to_string(kSytBruteforceMaxWeight) + " cells");
  }
  std::vector<int> current(static_cast<std::size_t>(shape.outer.length()));
  for (int i = 0; i < shape.outer.length(); ++i) current[static_cast<std::size_t>(i)] = shape.inner.part(i);
  return count_fillings(current, shape.outer, shape.size());
}

Integer syt_count_bruteforce(const Partition& lambda) {
  if (lambda.weight() > kSytBruteforceMaxWeight) {
    throw std::length_error("brute-force SYT enumeration is limited to weight " + std::to_string(kSytBruteforceMaxWeight));
  }
  return skew_syt_count_bruteforce(SkewShape(lambda, Partition{}));
}

bool multiset_lemma_check(const Partition& lambda) {
  const int n = lambda.weight();
  std::vector<long> lhs = hook_values(lambda);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) lhs.push_back(lambda.part(i - 1) - lambda.part(j - 1) - i + j);
  }
  std::vector<long> rhs;
  for (long c : content_values(lambda)) rhs.push_back(n + c);
  for (int i = 1; i < n; ++i) rhs.insert(rhs.end(), static_cast<std::size_t>(n - i), i);
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

Alphabet staircase_alphabet(int n, bool squared) {
  if (n < 1) throw std::invalid_argument("staircase_alphabet: n must be positive");
  std::vector<long> v;
  for (long i = 1; i < n; ++i) v.insert(v.end(), static_cast<std::size_t>(n - i), squared ? i * i : i);
  return Alphabet::from_integers(v);
}

}  // namespace hooklab
