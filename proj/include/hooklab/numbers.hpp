#pragma once

#include "hooklab/rational.hpp"

namespace hooklab {

/// Unsigned Stirling number of the first kind: permutations of n elements
/// with exactly k cycles.
Integer signless_stirling(unsigned n, unsigned k);

/// Central factorial number T(k, j) from the alternating sum
///   2 * sum_{i=1..j} (-1)^(j-i) i^(2k) / ((j-i)! (j+i)!).
/// Requires 1 <= j <= k; throws std::domain_error otherwise.
Rational central_factorial_T(unsigned k, unsigned j);

}  // namespace hooklab
