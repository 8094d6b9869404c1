// Acceptance gate: one PASS/FAIL line per criterion, exact equality throughout,
// each criterion also held to its wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hooklab/functional.hpp"
#include "hooklab/numbers.hpp"
#include "hooklab/series_lab.hpp"
#include "hooklab/symfun.hpp"

using namespace hooklab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Rational Q(const char* s) { return parse_rational(s); }

Poly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

Poly product(const Rational& scale, std::initializer_list<Poly> factors) {
  Poly out = scale;
  for (const auto& f : factors) out *= f;
  return out;
}

const Poly n_ = poly({0, 1});
Poly n_minus(long a) { return poly({-a, 1}); }

// hand-transcribed reference tables
std::vector<std::pair<Partition, Poly>> reference_n_mu() {
  return {
      {{1, 1}, product(Q("1/2"), {n_, n_minus(1)})},
      {{2, 2}, product(Q("1/24"), {n_, n_minus(1), n_minus(2), poly({-1, 3})})},
      {{2, 1, 1}, product(Q("1/4"), {n_, n_minus(1), n_minus(2), poly({1, 1})})},
      {{1, 1, 1, 1}, product(Q("1/4"), {n_, n_minus(1), poly({-12, 1, 3})})},
      {{3, 3}, product(Q("1/48"), {n_, n_, n_minus(1), n_minus(1), n_minus(2), n_minus(3)})},
      {{3, 2, 1}, product(Q("1/48"), {n_, n_minus(1), n_minus(2), n_minus(3), poly({4, 5, 3})})},
      {{3, 1, 1, 1}, product(Q("1/8"), {n_, n_minus(1), n_minus(2), n_minus(3), poly({4, 3, 1})})},
      {{2, 2, 2}, product(Q("1/24"), {n_, n_minus(1), n_minus(2), poly({-46, -9, 0, 3})})},
      {{2, 2, 1, 1}, product(Q("1/48"), {n_, n_minus(1), n_minus(2), poly({-312, -59, 20, 15})})},
      {{2, 1, 1, 1, 1}, product(Q("1/4"), {n_, n_minus(1), n_minus(2), poly({-96, -7, 8, 3})})},
      {{1, 1, 1, 1, 1, 1}, product(Q("1/8"), {n_, n_minus(1), poly({1344, -700, -105, 30, 15})})},
  };
}

std::vector<std::pair<Partition, Poly>> reference_phi_e_mu() {
  return {
      {{1}, product(Q("1/2"), {n_, poly({-1, 3})})},
      {{2}, product(Q("1/24"), {n_, n_minus(1), poly({74, -67, 27})})},
      {{1, 1}, product(Q("1/12"), {n_, poly({8, -9, -14, 27})})},
      {{3}, product(Q("1/48"), {n_, n_minus(1), n_minus(2), poly({-552, 511, -174, 27})})},
      {{2, 1}, product(Q("1/48"), {n_, n_minus(1), poly({-512, 390, 137, -204, 81})})},
      {{1, 1, 1}, product(Q("1/24"), {n_, poly({-128, 216, -31, -69, -45, 81})})},
  };
}

Rational random_q(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 5) + 1;
  return Rational(num) / Rational(den);
}

Alphabet random_alphabet_of(std::mt19937_64& rng, std::size_t size) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_q(rng));
  return Alphabet(std::move(v));
}

// (1/n!) sum f^2 sum_u g(cell value), summed directly
template <typename CellValues, typename G>
Rational direct_cell_sum(int n, CellValues&& values_of, G&& g) {
  Rational total = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    const Integer f = syt_count(lambda);
    Rational s = 0;
    for (const auto& a : values_of(lambda).values()) s += g(a);
    total += Rational(f * f) * s;
  }
  return total / Rational(factorial(static_cast<unsigned long>(n)));
}

std::vector<long> partition_counts(int N) {
  std::vector<long> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= N; ++k) {
    for (int n = k; n <= N; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - k)];
  }
  return p;
}

std::string label(const Partition& mu, int n) { return "mu=" + to_string(mu) + " n=" + std::to_string(n); }

Outcome c1_sum_of_squares() {
  Outcome o;
  for (int n = 0; n <= 20; ++n) {
    Integer total = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const Integer f = syt_count(lambda);
      total += f * f;
    }
    o.require(total == factorial(static_cast<unsigned long>(n)), "n=" + std::to_string(n));
  }
  return o;
}

Outcome c2_syt_bruteforce() {
  Outcome o;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      o.require(syt_count(lambda) == syt_count_bruteforce(lambda), to_string(lambda));
    }
  }
  return o;
}

Outcome c3_multiset_lemma() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      o.require(multiset_lemma_check(lambda), to_string(lambda));
      // both sides rebuilt here as sorted integer lists
      std::vector<long> left, right;
      for (const auto& h : hooks(lambda).values()) left.push_back(h.get_num().get_si());
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) left.push_back(lambda.part(i - 1) - lambda.part(j - 1) - i + j);
      }
      for (const auto& c : contents(lambda).values()) right.push_back(n + c.get_num().get_si());
      for (int i = 1; i < n; ++i) right.insert(right.end(), static_cast<std::size_t>(n - i), i);
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      o.require(left == right, "rebuilt " + to_string(lambda));
    }
  }
  return o;
}

Outcome check_table(const std::vector<TableEntry>& table, const std::vector<std::pair<Partition, Poly>>& reference,
                    int max_n, FunctionalSpec (*spec_of)(const Partition&)) {
  Outcome o;
  o.require(table.size() == reference.size(), "table size");
  for (const auto& [mu, expected] : reference) {
    auto it = std::find_if(table.begin(), table.end(), [&](const TableEntry& e) { return e.mu == mu; });
    if (it == table.end()) {
      o.require(false, "missing " + to_string(mu));
      continue;
    }
    o.require(it->fit.verified, "unverified fit " + to_string(mu));
    o.require(it->golden == expected, "embedded reference differs from reference " + to_string(mu));
    o.require(it->fit.polynomial == expected, "fit " + to_string(mu) + " = " + to_string(it->fit.polynomial));
    const FunctionalSpec spec = spec_of(mu);
    for (int n = 0; n <= max_n; ++n) o.require(functional_value(spec, n) == expected(Rational(n)), label(mu, n));
  }
  return o;
}

Outcome c4_n_mu() { return check_table(n_mu_table(), reference_n_mu(), 12, n_mu_spec); }

Outcome c5_phi_e_mu() { return check_table(phi_e_mu_table(), reference_phi_e_mu(), 9, phi_e_mu_spec); }

Outcome c6_nekrasov_okounkov() {
  Outcome o;
  const Series lhs = no_lhs(12);
  const Series rhs = no_rhs(12);
  o.require(lhs == rhs, "no_lhs(12) != no_rhs(12)");
  const auto p = partition_counts(12);
  for (int n = 0; n <= 12; ++n) {
    const Rational pn(p[static_cast<std::size_t>(n)]);
    o.require(lhs[static_cast<std::size_t>(n)](0) == pn, "lhs at t=0, n=" + std::to_string(n));
    o.require(rhs[static_cast<std::size_t>(n)](0) == pn, "rhs at t=0, n=" + std::to_string(n));
  }
  return o;
}

Outcome c7_content_series() {
  Outcome o;
  o.require(cno_check(14), "cno_check(14)");
  const Series lhs = cno_lhs(14);
  for (long t0 = 1; t0 <= 4; ++t0) {
    for (int n = 0; n <= 14; ++n) {
      o.require(lhs[static_cast<std::size_t>(n)](Rational(t0)) == Rational(binomial(t0 + n - 1, n)),
                "binomial series t=" + std::to_string(t0));
    }
  }
  std::mt19937_64 rng(20090325);
  std::vector<Rational> ts, vs;
  while (ts.size() < 5) {
    const Rational q = random_q(rng);
    if (std::find(ts.begin(), ts.end(), q) == ts.end()) ts.push_back(q);
  }
  while (vs.size() < 5) {
    const Rational q = random_q(rng);
    if (std::find(vs.begin(), vs.end(), q) == vs.end()) vs.push_back(q);
  }
  std::vector<GridPoint> grid;
  for (const auto& t : ts) {
    for (const auto& v : vs) grid.push_back({t, v});
  }
  o.require(two_param_check(10, grid), "two-parameter grid");
  return o;
}

Outcome c8_okada_panova() {
  Outcome o;
  auto contents_sq = [](const Partition& l) { return contents(l).squared(); };
  auto hooks_sq = [](const Partition& l) { return hooks(l).squared(); };
  for (int n = 0; n <= 12; ++n) {
    const std::string at = " n=" + std::to_string(n);
    for (int r = 0; r <= 4; ++r) {
      const auto s = okada_sides(r, n);
      o.require(s.holds(), "okada r=" + std::to_string(r) + at);
      const Rational direct = direct_cell_sum(n, contents_sq, [r](const Rational& c2) {
        Rational prod = 1;
        for (int i = 0; i < r; ++i) prod *= c2 - i * i;
        return prod;
      });
      o.require(direct == s.lhs, "okada direct r=" + std::to_string(r) + at);
    }
    for (int k = 1; k <= 4; ++k) {
      const auto s = okada_power_sides(k, n);
      o.require(s.holds(), "okada powers k=" + std::to_string(k) + at);
      o.require(direct_cell_sum(n, contents_sq, [k](const Rational& c2) { return power(c2, k); }) == s.lhs,
                "okada powers direct k=" + std::to_string(k) + at);
    }
    for (int r = 0; r <= 3; ++r) {
      const auto s = panova_sides(r, n);
      o.require(s.holds(), "hook analogue r=" + std::to_string(r) + at);
      const Rational direct = direct_cell_sum(n, hooks_sq, [r](const Rational& h2) {
        Rational prod = 1;
        for (int i = 1; i <= r; ++i) prod *= h2 - i * i;
        return prod;
      });
      o.require(direct == s.lhs, "hook analogue direct r=" + std::to_string(r) + at);
    }
    for (int k = 0; k <= 3; ++k) {
      const auto s = hook_power_sides(k, n);
      o.require(s.holds(), "hook powers k=" + std::to_string(k) + at);
      o.require(direct_cell_sum(n, hooks_sq, [k](const Rational& h2) { return power(h2, k); }) == s.lhs,
                "hook powers direct k=" + std::to_string(k) + at);
    }
  }
  return o;
}

Outcome c9_conid() {
  Outcome o;
  // count = n! * (1/n!^2) sum f^2 e_mu(contents) = functional value
  auto check = [&](const Partition& mu, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      const Integer count = conid_bruteforce(mu, n);
      Rational sum = 0;
      for (const auto& lambda : enumerate_partitions(n)) {
        const Integer f = syt_count(lambda);
        sum += Rational(f * f) * eval_term({Basis::e, mu, 'x'}, contents(lambda));
      }
      const Rational nf(factorial(static_cast<unsigned long>(n)));
      o.require(Rational(count) == nf * (sum / (nf * nf)), label(mu, n));
      o.require(Rational(count) == functional_value(n_mu_spec(mu), n), "functional " + label(mu, n));
    }
  };
  for (const Partition& mu : {Partition{1, 1}, Partition{2, 1}, Partition{3, 1}, Partition{2, 2}}) check(mu, 8);
  for (const Partition& mu : {Partition{1, 1, 1}, Partition{2, 1, 1}}) check(mu, 6);
  return o;
}

Outcome c10_spid_vphi() {
  Outcome o;
  std::mt19937_64 rng(20090326);
  std::vector<Rational> v0s;
  for (int i = 0; i < 5; ++i) v0s.push_back(random_q(rng));
  std::vector<Alphabet> alphabets;
  for (int i = 0; i < 3; ++i) alphabets.push_back(random_alphabet_of(rng, 7));
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v0 : v0s) {
      for (const auto& a : alphabets) o.require(spid_check(n, v0, a), "spid n=" + std::to_string(n) + " v0=" + to_string(v0));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      o.require(phi_p(mu) == phi_p_character_sum(mu), "phi(p_mu) " + to_string(mu));
    }
  }
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const Poly a = a_poly(lambda);
      o.require(a == a_poly_combinatorial(lambda), "A_lambda " + to_string(lambda));
      for (long v = -5; v <= 5; ++v) o.require(is_integer(a(Rational(v))), "integrality " + to_string(lambda));
    }
  }
  return o;
}

Outcome c11_hkm2_cauchy() {
  Outcome o;
  std::mt19937_64 rng(20090327);
  for (int k = 2; k <= 3; ++k) {
    for (int n = 0; n <= 5; ++n) {
      std::vector<Alphabet> alphabets;
      for (int i = 0; i < k; ++i) alphabets.push_back(random_alphabet_of(rng, 3));
      o.require(hkm2_check(k, n, alphabets), "hkm2 k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  for (int n = 0; n <= 7; ++n) {
    const Alphabet x = random_alphabet_of(rng, 4);
    const Alphabet y = random_alphabet_of(rng, 3);
    o.require(cauchy_check(n, x, y), "cauchy n=" + std::to_string(n));
    o.require(dual_cauchy_check(n, x, y), "dual cauchy n=" + std::to_string(n));
  }
  return o;
}

Outcome c12_negative_control() {
  Outcome o;
  const FunctionalSpec squares{parse_symexpr("p[2](y)"), {{'y', AlphabetKind::parts}}};
  // direct: (1/6)(1*9 + 4*5 + 1*3)
  o.require(Rational(9 + 4 * 5 + 3) / 6 == Q("16/3"), "hand value");
  const Rational v3 = functional_value(squares, 3);
  o.require(v3 == Q("16/3"), "value at n=3 is " + to_string(v3));
  o.require(!is_integer(v3), "value at n=3 is an integer");
  const FitReport bad = fit_functional(squares);
  o.require(!bad.verified, "parts alphabet fitted a polynomial");
  o.require(bad.degree_tried == degree_cap(squares), "cap not reached");

  for (const char* text : {"e[1,1](y)", "p[2](y)", "e[2](y)*e[1](x)"}) {
    const FunctionalSpec spec{parse_symexpr(text), {{'x', AlphabetKind::contents}, {'y', AlphabetKind::shifted_parts}}};
    const FunctionalSpec variant = shifted_to_minus_index(spec);
    o.require(fit_functional(variant).verified, std::string("variant did not verify: ") + text);
  }
  const FunctionalSpec e1{parse_symexpr("e[1](y)"), {{'y', AlphabetKind::shifted_parts}}};
  for (int n = 0; n <= 10; ++n) {
    o.require(variant_shifted_minus_index(e1, n) == Rational(n - n * (n + 1) / 2), "e_1 variant n=" + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sum of f_lambda^2 equals n! for n <= 20", 5, c1_sum_of_squares},
      {2, "hook length formula matches brute force for |lambda| <= 8", 30, c2_syt_bruteforce},
      {3, "multiset lemma for all lambda |- n <= 12", 10, c3_multiset_lemma},
      {4, "eleven N_mu polynomials recovered and checked for n <= 12", 120, c4_n_mu},
      {5, "six Phi_n(e_mu) polynomials recovered", 120, c5_phi_e_mu},
      {6, "Nekrasov-Okounkov identity to order 12 in Q[t]", 60, c6_nekrasov_okounkov},
      {7, "content series to order 14 and two-parameter grid at N = 10", 60, c7_content_series},
      {8, "content-product and hook-product sums for n <= 12", 60, c8_okada_panova},
      {9, "permutation counts equal the content functional", 120, c9_conid},
      {10, "spid identity, phi(p_mu) character sum, A_lambda forms", 120, c10_spid_vphi},
      {11, "hkm2 brute force, Cauchy and dual Cauchy", 60, c11_hkm2_cauchy},
      {12, "parts alphabet fails to be polynomial; lambda_i - i variant holds", 30, c12_negative_control},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over time budget";
    }
    if (!outcome.ok) ++failed;
    std::printf("%s  criterion %2d  %-66s %8.3f s / %g s%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds, outcome.ok ? "" : "  -- ", outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
