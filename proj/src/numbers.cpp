#include "hooklab/numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hooklab {

Integer signless_stirling(unsigned n, unsigned k) {
  if (k > n) return 0;
  // c(m, j) = c(m-1, j-1) + (m-1) c(m-1, j), one row at a time.
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = m; j >= 1; --j) row[j] = row[j - 1] + (m - 1) * row[j];
    row[0] = 0;
  }
  return row[k];
}

Rational central_factorial_T(unsigned k, unsigned j) {
  if (j < 1 || j > k) {
    throw std::domain_error("central_factorial_T: need 1 <= j <= k, got k=" + std::to_string(k) +
                            " j=" + std::to_string(j));
  }
  Rational sum = 0;
  for (unsigned i = 1; i <= j; ++i) {
    Rational term(power(Integer(i), 2UL * k), factorial(j - i) * factorial(j + i));
    term.canonicalize();
    if ((j - i) % 2 == 1) term = -term;
    sum += term;
  }
  return 2 * sum;
}

}  // namespace hooklab
