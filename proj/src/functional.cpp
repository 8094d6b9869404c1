#include "hooklab/functional.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hooklab/detail/parallel.hpp"
#include "hooklab/detail/permutations.hpp"
#include "hooklab/numbers.hpp"

namespace hooklab {

namespace {

constexpr std::pair<AlphabetKind, std::string_view> kKindNames[] = {
    {AlphabetKind::contents, "contents"},
    {AlphabetKind::contents_squared, "contents_squared"},
    {AlphabetKind::hooks_squared, "hooks_squared"},
    {AlphabetKind::shifted_parts, "shifted_parts"},
    {AlphabetKind::parts, "parts"},
    {AlphabetKind::parts_minus_index, "parts_minus_index"},
};

}  // namespace

std::string_view to_string(AlphabetKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

AlphabetKind parse_alphabet_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown alphabet kind '" + std::string(name) + "'");
}

Alphabet build_alphabet(AlphabetKind kind, const Partition& lambda, int n) {
  switch (kind) {
    case AlphabetKind::contents: return contents(lambda);
    case AlphabetKind::contents_squared: return contents(lambda).squared();
    case AlphabetKind::hooks_squared: return hooks(lambda).squared();
    case AlphabetKind::shifted_parts: return shifted_parts(lambda, n);
    case AlphabetKind::parts: return padded_parts(lambda, n);
    case AlphabetKind::parts_minus_index: return parts_minus_index(lambda, n);
  }
  throw std::logic_error("unhandled alphabet kind");
}

void FunctionalSpec::validate() const {
  for (Slot s : expr.slots()) {
    if (!binding.contains(s)) throw std::invalid_argument(std::string("slot '") + s + "' has no alphabet binding");
  }
}

std::map<Slot, AlphabetKind> parse_binding(std::string_view text) {
  std::map<Slot, AlphabetKind> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    const auto eq = item.find('=');
    if (eq != 1 || kSlots.find(item[0]) == std::string_view::npos) {
      throw std::invalid_argument("alphabet binding must look like x=contents, got '" + std::string(item) + "'");
    }
    if (!out.emplace(item[0], parse_alphabet_kind(item.substr(2))).second) {
      throw std::invalid_argument(std::string("slot '") + item[0] + "' bound twice");
    }
    start = end + 1;
  }
  return out;
}

Rational functional_value(const FunctionalSpec& spec, int n, unsigned jobs) {
  if (n < 0) throw std::invalid_argument("functional_value: n must be nonnegative");
  spec.validate();
  const auto partitions = enumerate_partitions(n);
  const auto slots = spec.expr.slots();
  const auto terms = detail::parallel_map<Rational>(partitions.size(), jobs, [&](std::size_t i) {
    const Partition& lambda = partitions[i];
    Assignment assignment;
    for (Slot s : slots) assignment.emplace(s, build_alphabet(spec.binding.at(s), lambda, n));
    const Rational value = eval_expr(spec.expr, assignment);
    if (value == 0) return Rational(0);
    const Integer f = syt_count(lambda);
    return Rational(value * f * f);
  });
  Rational total = 0;
  for (const auto& t : terms) total += t;
  return total / Rational(factorial(static_cast<unsigned long>(n)));
}

// ---------------------------------------------------------------------------
// Fitting

namespace {

bool uses_only_contents(const FunctionalSpec& spec) {
  for (Slot s : spec.expr.slots()) {
    if (spec.binding.at(s) != AlphabetKind::contents) return false;
  }
  return true;
}

}  // namespace

int default_degree_hint(const FunctionalSpec& spec) {
  const int w = spec.expr.weight();
  return uses_only_contents(spec) ? w : 2 * w;
}

int degree_cap(const FunctionalSpec& spec) { return 4 * spec.expr.weight() + 4; }

std::optional<FitReport> fit_samples(const std::vector<Rational>& values, int degree) {
  const int needed = degree + 1 + kFitVerificationPoints;
  if (degree < 0 || static_cast<int>(values.size()) < needed) return std::nullopt;
  std::vector<std::pair<Rational, Rational>> points;
  for (int n = 0; n <= degree; ++n) points.emplace_back(Rational(n), values[static_cast<std::size_t>(n)]);
  FitReport report;
  report.polynomial = lagrange_interpolate(points);
  report.first_sample = 0;
  report.last_sample = needed - 1;
  report.verification_points = kFitVerificationPoints;
  report.degree_tried = degree;
  report.verified = true;
  for (int n = degree + 1; n < needed; ++n) {
    if (report.polynomial(Rational(n)) != values[static_cast<std::size_t>(n)]) {
      report.verified = false;
      break;
    }
  }
  return report;
}

FitReport fit_functional(const FunctionalSpec& spec, const FitOptions& options) {
  spec.validate();
  const int cap = degree_cap(spec);
  int degree = std::clamp(options.degree_hint.value_or(default_degree_hint(spec)), 0, cap);
  std::vector<Rational> values;
  FitReport last;
  for (; degree <= cap; ++degree) {
    while (static_cast<int>(values.size()) < degree + 1 + kFitVerificationPoints) {
      values.push_back(functional_value(spec, static_cast<int>(values.size()), options.jobs));
    }
    last = *fit_samples(values, degree);
    if (last.verified) return last;
  }
  return last;
}

// ---------------------------------------------------------------------------
// Reference tables

std::vector<std::pair<Partition, Poly>> golden_n_mu() {
  const Poly n = Poly::variable();
  auto lin = [&](long a) { return n + Poly(a); };  // n + a
  auto cubic = [&](long c3, long c2, long c1, long c0) {
    return Poly(std::vector<Rational>{Rational(c0), Rational(c1), Rational(c2), Rational(c3)});
  };
  const Poly n1 = lin(-1), n2 = lin(-2), n3 = lin(-3);
  return {
      {Partition{1, 1}, n * n1 / Rational(2)},
      {Partition{2, 2}, n * n1 * n2 * (Poly(3) * n - Poly(1)) / Rational(24)},
      {Partition{2, 1, 1}, n * n1 * n2 * lin(1) / Rational(4)},
      {Partition{1, 1, 1, 1}, n * n1 * cubic(0, 3, 1, -12) / Rational(4)},
      {Partition{3, 3}, n * n * n1 * n1 * n2 * n3 / Rational(48)},
      {Partition{3, 2, 1}, n * n1 * n2 * n3 * cubic(0, 3, 5, 4) / Rational(48)},
      {Partition{3, 1, 1, 1}, n * n1 * n2 * n3 * cubic(0, 1, 3, 4) / Rational(8)},
      {Partition{2, 2, 2}, n * n1 * n2 * cubic(3, 0, -9, -46) / Rational(24)},
      {Partition{2, 2, 1, 1}, n * n1 * n2 * cubic(15, 20, -59, -312) / Rational(48)},
      {Partition{2, 1, 1, 1, 1}, n * n1 * n2 * cubic(3, 8, -7, -96) / Rational(4)},
      {Partition{1, 1, 1, 1, 1, 1},
       n * n1 * Poly(std::vector<Rational>{Rational(1344), Rational(-700), Rational(-105), Rational(30), Rational(15)}) /
           Rational(8)},
  };
}

std::vector<std::pair<Partition, Poly>> golden_phi_e_mu() {
  const Poly n = Poly::variable();
  const Poly n1 = n - Poly(1), n2 = n - Poly(2);
  auto poly = [](std::vector<long> low_first) {
    std::vector<Rational> c;
    for (long x : low_first) c.emplace_back(x);
    return Poly(std::move(c));
  };
  return {
      {Partition{1}, n * poly({-1, 3}) / Rational(2)},
      {Partition{2}, n * n1 * poly({74, -67, 27}) / Rational(24)},
      {Partition{1, 1}, n * poly({8, -9, -14, 27}) / Rational(12)},
      {Partition{3}, n * n1 * n2 * poly({-552, 511, -174, 27}) / Rational(48)},
      {Partition{2, 1}, n * n1 * poly({-512, 390, 137, -204, 81}) / Rational(48)},
      {Partition{1, 1, 1}, n * poly({-128, 216, -31, -69, -45, 81}) / Rational(24)},
  };
}

FunctionalSpec n_mu_spec(const Partition& mu) {
  return {SymExpr::term(Basis::e, mu, 'x'), {{'x', AlphabetKind::contents}}};
}

FunctionalSpec phi_e_mu_spec(const Partition& mu) {
  return {SymExpr::term(Basis::e, mu, 'z'), {{'z', AlphabetKind::hooks_squared}}};
}

namespace {

std::vector<TableEntry> fit_table(const std::vector<std::pair<Partition, Poly>>& golden,
                                  FunctionalSpec (*make_spec)(const Partition&), unsigned jobs) {
  std::vector<TableEntry> out;
  for (const auto& [mu, poly] : golden) {
    FitOptions options;
    options.jobs = jobs;
    out.push_back({mu, fit_functional(make_spec(mu), options), poly});
  }
  return out;
}

}  // namespace

std::vector<TableEntry> n_mu_table(unsigned jobs) { return fit_table(golden_n_mu(), n_mu_spec, jobs); }

std::vector<TableEntry> phi_e_mu_table(unsigned jobs) { return fit_table(golden_phi_e_mu(), phi_e_mu_spec, jobs); }

// ---------------------------------------------------------------------------
// Permutation-count oracle

bool conid_within_guard(const Partition& mu, int n) {
  if (n < 0) return false;
  const int k = mu.length();
  if (k <= 1) return true;
  return power(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(k - 1)) <= Integer(10000000);
}

Integer conid_bruteforce(const Partition& mu, int n) {
  if (!conid_within_guard(mu, n)) {
    throw std::out_of_range("conid_bruteforce: n!^(k-1) exceeds 10^7 for mu=" + to_string(mu) + ", n=" + std::to_string(n));
  }
  const int k = mu.length();
  if (k == 0) return 1;
  auto wanted_cycles = [&](int i) { return n - mu.part(i); };
  if (k == 1) return wanted_cycles(0) == n ? 1 : 0;

  // Candidates for w_1 .. w_{k-1}; w_k is forced to be the inverse of their product.
  std::vector<std::vector<detail::Perm>> candidates(static_cast<std::size_t>(k - 1));
  detail::for_each_permutation(n, [&](const detail::Perm& w) {
    const int c = detail::cycle_count(w);
    for (int i = 0; i < k - 1; ++i) {
      if (c == wanted_cycles(i)) candidates[static_cast<std::size_t>(i)].push_back(w);
    }
  });
  for (const auto& c : candidates) {
    if (c.empty()) return 0;
  }

  unsigned long count = 0;
  std::vector<detail::Perm> prefix(static_cast<std::size_t>(k), detail::identity_permutation(n));
  const int last_cycles = wanted_cycles(k - 1);
  // prefix[i] holds w_1 ... w_i.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k - 1) {
      if (detail::cycle_count(prefix[static_cast<std::size_t>(i)]) == last_cycles) ++count;
      return;
    }
    for (const auto& w : candidates[static_cast<std::size_t>(i)]) {
      detail::compose(prefix[static_cast<std::size_t>(i)], w, prefix[static_cast<std::size_t>(i + 1)]);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return Integer(count);
}

// ---------------------------------------------------------------------------
// Content-product and hook-product sums

namespace {

void require_order(int order, int n, const char* what) {
  if (order < 0 || order > kOkadaMaxOrder || n < 0 || n > kOkadaMaxN) {
    throw std::out_of_range(std::string(what) + " requires 0 <= order <= " + std::to_string(kOkadaMaxOrder) +
                            " and 0 <= n <= " + std::to_string(kOkadaMaxN));
  }
}

// (1/n!) sum f^2 sum_{a in alphabet} g(a): the nonconstant part of g becomes a
// combination of power sums; the constant part counts cells.
Rational cell_sum_functional(const Poly& g, AlphabetKind kind, int n, unsigned jobs) {
  SymExpr expr;
  for (int k = 1; k <= g.degree(); ++k) {
    expr += SymExpr::term(Basis::p, Partition{k}, 'x', g.coefficient(static_cast<std::size_t>(k)));
  }
  FunctionalSpec spec{expr, {{'x', kind}}};
  Rational value = functional_value(spec, n, jobs);
  if (g.coefficient(0) != 0) {
    value += g.coefficient(0) * n * functional_value(FunctionalSpec{SymExpr::constant(1), {}}, n, jobs);
  }
  return value;
}

Rational ffac(int n, int r) { return falling_factorial(Rational(n), static_cast<unsigned>(r)); }

}  // namespace

IdentitySides okada_sides(int r, int n, unsigned jobs) {
  require_order(r, n, "okada_check");
  Poly g = 1;
  const Poly y = Poly::variable();
  for (int i = 0; i < r; ++i) g *= y - Poly(static_cast<long>(i) * i);
  const Integer f1 = factorial(static_cast<unsigned long>(r + 1));
  const Rational rhs = Rational(factorial(2UL * static_cast<unsigned long>(r))) / Rational(f1 * f1) * ffac(n, r + 1);
  return {cell_sum_functional(g, AlphabetKind::contents_squared, n, jobs), rhs};
}

bool okada_check(int r, int n, unsigned jobs) { return okada_sides(r, n, jobs).holds(); }

IdentitySides okada_power_sides(int k, int n, unsigned jobs) {
  require_order(k, n, "okada_power_check");
  if (k < 1) throw std::out_of_range("okada_power_check requires k >= 1");
  Rational rhs = 0;
  for (int j = 1; j <= k; ++j) {
    const Integer f1 = factorial(static_cast<unsigned long>(j + 1));
    rhs += central_factorial_T(static_cast<unsigned>(k), static_cast<unsigned>(j)) *
           Rational(factorial(2UL * static_cast<unsigned long>(j))) / Rational(f1 * f1) * ffac(n, j + 1);
  }
  return {cell_sum_functional(Poly::monomial(1, static_cast<std::size_t>(k)), AlphabetKind::contents_squared, n, jobs),
          rhs};
}

bool okada_power_check(int k, int n, unsigned jobs) { return okada_power_sides(k, n, jobs).holds(); }

IdentitySides panova_sides(int r, int n, unsigned jobs) {
  require_order(r, n, "panova_check");
  Poly g = 1;
  const Poly y = Poly::variable();
  for (int i = 1; i <= r; ++i) g *= y - Poly(static_cast<long>(i) * i);
  const Rational rhs = Rational(binomial(2L * r, r) * binomial(2L * r + 2, r + 1)) /
                       Rational(2L * (r + 1) * (r + 1)) * ffac(n, r + 1);
  return {cell_sum_functional(g, AlphabetKind::hooks_squared, n, jobs), rhs};
}

bool panova_check(int r, int n, unsigned jobs) { return panova_sides(r, n, jobs).holds(); }

IdentitySides hook_power_sides(int k, int n, unsigned jobs) {
  require_order(k, n, "hook_power_check");
  Rational rhs = 0;
  for (int j = 1; j <= k + 1; ++j) {
    rhs += central_factorial_T(static_cast<unsigned>(k + 1), static_cast<unsigned>(j)) *
           Rational(binomial(2L * j - 2, j - 1) * binomial(2L * j, j)) / Rational(2L * j * j) * ffac(n, j);
  }
  return {cell_sum_functional(Poly::monomial(1, static_cast<std::size_t>(k)), AlphabetKind::hooks_squared, n, jobs),
          rhs};
}

bool hook_power_check(int k, int n, unsigned jobs) { return hook_power_sides(k, n, jobs).holds(); }

// ---------------------------------------------------------------------------

FunctionalSpec shifted_to_minus_index(const FunctionalSpec& spec) {
  FunctionalSpec out = spec;
  for (auto& [slot, kind] : out.binding) {
    if (kind == AlphabetKind::shifted_parts) kind = AlphabetKind::parts_minus_index;
  }
  return out;
}

Rational variant_shifted_minus_index(const FunctionalSpec& spec, int n, unsigned jobs) {
  return functional_value(shifted_to_minus_index(spec), n, jobs);
}

}  // namespace hooklab
