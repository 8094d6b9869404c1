#pragma once

// Weighted partition sums (1/n!) sum_{lambda |- n} f_lambda^2 K(alphabets of
// lambda), their polynomial fits in n, the reference tables, and the identity
// checks built on top of them.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/poly.hpp"
#include "hooklab/symfun.hpp"

namespace hooklab {

enum class AlphabetKind { contents, contents_squared, hooks_squared, shifted_parts, parts, parts_minus_index };

std::string_view to_string(AlphabetKind kind);
/// Throws std::invalid_argument for unknown names.
AlphabetKind parse_alphabet_kind(std::string_view name);

/// The alphabet of the given kind for lambda |- n (n used for zero padding).
Alphabet build_alphabet(AlphabetKind kind, const Partition& lambda, int n);

struct FunctionalSpec {
  SymExpr expr;
  std::map<Slot, AlphabetKind> binding;

  /// Throws std::invalid_argument if a slot of expr has no binding.
  void validate() const;
};

/// Parses "x=contents,y=shifted_parts".
std::map<Slot, AlphabetKind> parse_binding(std::string_view text);

/// (1/n!) sum_{lambda |- n} f_lambda^2 expr(bound alphabets of lambda). For
/// n = 0 the empty partition contributes expr on empty alphabets.
Rational functional_value(const FunctionalSpec& spec, int n, unsigned jobs = 1);

struct FitReport {
  Poly polynomial;
  int first_sample = 0;
  int last_sample = 0;
  int verification_points = 0;
  bool verified = false;
  /// Largest degree tried; equals the cap when the fit failed.
  int degree_tried = 0;
};

inline constexpr int kFitVerificationPoints = 3;

struct FitOptions {
  std::optional<int> degree_hint;
  unsigned jobs = 1;
};

/// Starting degree: the expression weight for content-only specs, twice the
/// weight when any slot is squared or bound to shifted parts.
int default_degree_hint(const FunctionalSpec& spec);
/// 4 * weight + 4.
int degree_cap(const FunctionalSpec& spec);

/// Samples n = 0, 1, 2, ...; fits degree d through the first d+1 samples and
/// accepts when the next three samples lie on the fit. d starts at the hint
/// and grows until the cap; reaching the cap yields verified = false.
FitReport fit_functional(const FunctionalSpec& spec, const FitOptions& options = {});

/// Same fit rule applied to an already computed sample sequence values[n].
/// Returns nullopt if the sequence is too short to decide.
std::optional<FitReport> fit_samples(const std::vector<Rational>& values, int degree);

struct TableEntry {
  Partition mu;
  FitReport fit;
  Poly golden;
  bool matches() const { return fit.verified && fit.polynomial == golden; }
};

/// The eleven nonzero N_mu (|mu| <= 6), e_mu evaluated on contents.
std::vector<std::pair<Partition, Poly>> golden_n_mu();
/// Phi_n(e_mu) for e_1, e_2, e_1^2, e_3, e_2 e_1, e_1^3 on squared hook lengths.
std::vector<std::pair<Partition, Poly>> golden_phi_e_mu();

FunctionalSpec n_mu_spec(const Partition& mu);
FunctionalSpec phi_e_mu_spec(const Partition& mu);

std::vector<TableEntry> n_mu_table(unsigned jobs = 1);
std::vector<TableEntry> phi_e_mu_table(unsigned jobs = 1);

/// #{(w_1..w_k) in S_n^k : w_1...w_k = 1, c(w_i) = n - mu_i} with k = l(mu),
/// by enumeration. Requires n!^(k-1) <= 10^7; throws std::out_of_range.
Integer conid_bruteforce(const Partition& mu, int n);
bool conid_within_guard(const Partition& mu, int n);

inline constexpr int kOkadaMaxOrder = 4;
inline constexpr int kOkadaMaxN = 14;

/// (1/n!) sum f^2 sum_u prod_{i=0}^{r-1} (c_u^2 - i^2)  vs  (2r)!/(r+1)!^2 <n>_{r+1}.
IdentitySides okada_sides(int r, int n, unsigned jobs = 1);
bool okada_check(int r, int n, unsigned jobs = 1);

/// (1/n!) sum f^2 sum_u c_u^{2k}  vs  sum_{j=1}^k T(k,j) (2j)!/(j+1)!^2 <n>_{j+1}; k >= 1.
IdentitySides okada_power_sides(int k, int n, unsigned jobs = 1);
bool okada_power_check(int k, int n, unsigned jobs = 1);

/// (1/n!) sum f^2 sum_u prod_{i=1}^{r} (h_u^2 - i^2)
///   vs  binom(2r, r) binom(2r+2, r+1) <n>_{r+1} / (2 (r+1)^2).
IdentitySides panova_sides(int r, int n, unsigned jobs = 1);
bool panova_check(int r, int n, unsigned jobs = 1);

/// (1/n!) sum f^2 sum_u h_u^{2k}
///   vs  sum_{j=1}^{k+1} T(k+1,j) binom(2j-2, j-1) binom(2j, j) <n>_j / (2 j^2).
IdentitySides hook_power_sides(int k, int n, unsigned jobs = 1);
bool hook_power_check(int k, int n, unsigned jobs = 1);

/// Copy of spec with every shifted_parts binding replaced by parts_minus_index.
FunctionalSpec shifted_to_minus_index(const FunctionalSpec& spec);
/// functional_value over {lambda_i - i} in place of {lambda_i + n - i}.
Rational variant_shifted_minus_index(const FunctionalSpec& spec, int n, unsigned jobs = 1);

}  // namespace hooklab
