#pragma once

#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination with row swaps on zero pivots.
/// The empty matrix has determinant 1.
Rational determinant(RationalMatrix m);

}  // namespace hooklab::detail
