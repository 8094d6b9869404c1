#pragma once

// Truncated generating-function checks: the Nekrasov-Okounkov product formula,
// its content analogue, and the two-parameter content variant.

#include <span>
#include <vector>

#include "hooklab/series.hpp"

namespace hooklab {

inline constexpr int kSeriesMaxOrder = 30;
inline constexpr int kTwoParamMaxOrder = 20;

/// sum_n ( sum_{lambda |- n} f^2 prod_u (t + h_u^2) ) x^n / n!^2, truncated at x^N.
Series no_lhs(int N, unsigned jobs = 1);
/// prod_{i=1..N} (1 - x^i)^(-1-t), truncated at x^N. Factors with i > N are 1
/// modulo x^(N+1).
Series no_rhs(int N);

/// sum_n ( sum_{lambda |- n} f^2 prod_u (t + c_u^2) ) x^n / n!^2.
Series cno_lhs(int N, unsigned jobs = 1);
/// (1 - x)^(-t).
Series cno_rhs(int N);
bool cno_check(int N, unsigned jobs = 1);

/// Partition numbers p(0..N) computed from the recursive enumeration.
std::vector<Integer> partition_numbers(int N);

struct GridPoint {
  Rational t;
  Rational v;
};

/// Coefficients of sum_n ( sum f^2 prod_u (t0 + c_u)(v0 + c_u) ) x^n / n!^2.
std::vector<Rational> two_param_lhs(int N, const GridPoint& point, unsigned jobs = 1);
/// Coefficients of (1 - x)^(-t0 v0).
std::vector<Rational> two_param_rhs(int N, const GridPoint& point);

/// Exact comparison at every grid point. A full grid of (N+1) x (N+1) distinct
/// t and v values determines every coefficient of the bivariate identity,
/// since the x^n coefficient has degree at most n in each of t and v.
/// Requires a nonempty grid and N <= 20.
bool two_param_check(int N, std::span<const GridPoint> grid, unsigned jobs = 1);

}  // namespace hooklab
