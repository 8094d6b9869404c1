#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "hooklab/partition.hpp"

namespace hooklab::detail {

using Perm = std::vector<std::uint8_t>;

inline Perm identity_permutation(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

/// Calls f(perm) for every permutation of {0..n-1} in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
  Perm p = identity_permutation(n);
  do {
    f(static_cast<const Perm&>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

inline int cycle_count(std::span<const std::uint8_t> w) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (std::size_t j = i; !(seen & (1u << j)); j = w[j]) seen |= 1u << j;
  }
  return cycles;
}

inline Partition cycle_type(std::span<const std::uint8_t> w) {
  std::uint32_t seen = 0;
  std::vector<int> lengths;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (std::size_t j = i; !(seen & (1u << j)); j = w[j]) {
      seen |= 1u << j;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

/// out = a o b, i.e. out[i] = a[b[i]].
inline void compose(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
}

}  // namespace hooklab::detail
