#pragma once

// Named verification families run by `hooklab verify`. Each family turns one
// group of identities into a list of pass/fail records.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/partition.hpp"

namespace hooklab {

struct VerifyOptions {
  /// Replaces the family's default range; must not exceed the family guard.
  std::optional<int> max_n;
  unsigned jobs = 1;
  std::uint64_t seed = 20090325;
};

struct CheckRecord {
  std::string family;
  std::string label;
  bool passed = false;
  std::string detail;
};

struct FamilyInfo {
  std::string_view name;
  int default_max_n;
  int guard_max_n;
  std::string_view summary;
};

/// Every family in the order `verify all` runs them.
const std::vector<FamilyInfo>& verify_families();

/// Runs one family, or every family for "all" (where max_n only lowers the
/// defaults). Throws std::invalid_argument for an unknown family and
/// std::out_of_range when max_n exceeds the family guard.
std::vector<CheckRecord> run_verify(std::string_view family, const VerifyOptions& options);

/// Seeded rational p/q with |p| <= max_num and 1 <= q <= max_den. Uses the raw
/// engine output so results do not depend on the standard library.
Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 5);
Alphabet random_alphabet(std::mt19937_64& rng, std::size_t size);

}  // namespace hooklab
