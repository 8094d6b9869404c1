#include "hooklab/series_lab.hpp"

#include <stdexcept>
#include <string>

#include "hooklab/detail/parallel.hpp"
#include "hooklab/partition.hpp"

namespace hooklab {

namespace {

void require_order(int N, int max, const char* what) {
  if (N < 0 || N > max) {
    throw std::out_of_range(std::string(what) + ": truncation order must lie in [0, " + std::to_string(max) + "]");
  }
}

// sum_{lambda |- n} f^2 prod_{a in A(lambda)} (t + a) / n!^2 as a polynomial in t.
template <typename AlphabetOf>
Poly weighted_layer(int n, AlphabetOf&& alphabet_of) {
  std::vector<Integer> acc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Integer> prod;
  for (const auto& lambda : enumerate_partitions(n)) {
    prod.assign(1, 1);
    for (const auto& a : alphabet_of(lambda).values()) {
      const Integer& value = a.get_num();  // alphabets here are integral
      prod.push_back(0);
      for (std::size_t k = prod.size() - 1; k >= 1; --k) prod[k] = prod[k - 1] + value * prod[k];
      prod[0] *= value;
    }
    const Integer f = syt_count(lambda);
    const Integer w = f * f;
    for (std::size_t k = 0; k < prod.size(); ++k) acc[k] += w * prod[k];
  }
  const Integer nf = factorial(static_cast<unsigned long>(n));
  const Integer denom = nf * nf;
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (const auto& c : acc) coeffs.push_back(make_rational(c, denom));
  return Poly(std::move(coeffs));
}

template <typename AlphabetOf>
Series weighted_series(int N, unsigned jobs, AlphabetOf alphabet_of) {
  auto layers = detail::parallel_map<Poly>(static_cast<std::size_t>(N) + 1, jobs,
                                           [&](std::size_t n) { return weighted_layer(static_cast<int>(n), alphabet_of); });
  return Series(static_cast<unsigned>(N), std::move(layers));
}

}  // namespace

Series no_lhs(int N, unsigned jobs) {
  require_order(N, kSeriesMaxOrder, "no_lhs");
  return weighted_series(N, jobs, [](const Partition& lambda) { return hooks(lambda).squared(); });
}

Series no_rhs(int N) {
  require_order(N, kSeriesMaxOrder, "no_rhs");
  const auto order = static_cast<unsigned>(N);
  Series product = Series::one(order);
  for (unsigned i = 1; i <= order; ++i) {
    std::vector<Rational> factor(i + 1, Rational(0));
    factor[0] = 1;
    factor[i] = -1;
    const Series base = Series::from_rationals(order, factor);
    product = series_mul(product, series_pow_affine_t(base, -1, -1));
  }
  return product;
}

Series cno_lhs(int N, unsigned jobs) {
  require_order(N, kSeriesMaxOrder, "cno_lhs");
  return weighted_series(N, jobs, [](const Partition& lambda) { return contents(lambda).squared(); });
}

Series cno_rhs(int N) {
  require_order(N, kSeriesMaxOrder, "cno_rhs");
  const auto order = static_cast<unsigned>(N);
  return series_pow_affine_t(Series::from_rationals(order, {Rational(1), Rational(-1)}), 0, -1);
}

bool cno_check(int N, unsigned jobs) { return cno_lhs(N, jobs) == cno_rhs(N); }

std::vector<Integer> partition_numbers(int N) {
  std::vector<Integer> out;
  for (int n = 0; n <= N; ++n) out.emplace_back(static_cast<unsigned long>(enumerate_partitions(n).size()));
  return out;
}

std::vector<Rational> two_param_lhs(int N, const GridPoint& point, unsigned jobs) {
  require_order(N, kTwoParamMaxOrder, "two_param_lhs");
  return detail::parallel_map<Rational>(static_cast<std::size_t>(N) + 1, jobs, [&](std::size_t layer) {
    const int n = static_cast<int>(layer);
    Rational total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      Rational prod = 1;
      for (const auto& c : contents(lambda).values()) {
        prod *= (point.t + c) * (point.v + c);
        if (prod == 0) break;
      }
      if (prod == 0) continue;
      const Integer f = syt_count(lambda);
      total += prod * f * f;
    }
    const Integer nf = factorial(static_cast<unsigned long>(n));
    return Rational(total / Rational(nf * nf));
  });
}

std::vector<Rational> two_param_rhs(int N, const GridPoint& point) {
  require_order(N, kTwoParamMaxOrder, "two_param_rhs");
  const auto order = static_cast<unsigned>(N);
  const Series s = series_pow(Series::from_rationals(order, {Rational(1), Rational(-1)}), -point.t * point.v);
  std::vector<Rational> out;
  for (unsigned n = 0; n <= order; ++n) out.push_back(s[n].coefficient(0));
  return out;
}

bool two_param_check(int N, std::span<const GridPoint> grid, unsigned jobs) {
  require_order(N, kTwoParamMaxOrder, "two_param_check");
  if (grid.empty()) throw std::invalid_argument("two_param_check: grid must be nonempty");
  for (const auto& point : grid) {
    if (two_param_lhs(N, point, jobs) != two_param_rhs(N, point)) return false;
  }
  return true;
}

}  // namespace hooklab
