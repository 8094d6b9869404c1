#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "hooklab/symfun.hpp"
#include "test_util.hpp"

using namespace hooklab;
using testutil::P;
using testutil::Q;

namespace {

Alphabet ints(std::vector<long> v) { return Alphabet::from_integers(v); }

Alphabet ones(int t) { return ints(std::vector<long>(static_cast<std::size_t>(t), 1)); }

// e_k as a sum over k-subsets
Rational e_by_subsets(const Alphabet& a, int k) {
  const auto& v = a.values();
  const int n = static_cast<int>(v.size());
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Rational prod = 1;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) prod *= v[static_cast<std::size_t>(i)];
    }
    total += prod;
  }
  return total;
}

// sum over all exponent vectors in {0..top}^size, keeping those whose sorted
// nonzero entries spell out the target partition (or any vector of degree k
// when target is empty and k is given)
void for_each_exponent(std::size_t size, int top, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> alpha(size, 0);
  while (true) {
    f(alpha);
    std::size_t i = 0;
    while (i < size && alpha[i] == top) alpha[i++] = 0;
    if (i == size) return;
    ++alpha[i];
  }
}

Rational monomial_value(const Alphabet& a, const std::vector<int>& alpha) {
  Rational prod = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) prod *= power(a.values()[i], alpha[i]);
  return prod;
}

Rational h_by_exponents(const Alphabet& a, int k) {
  Rational total = 0;
  for_each_exponent(a.size(), k, [&](const std::vector<int>& alpha) {
    int deg = 0;
    for (int x : alpha) deg += x;
    if (deg == k) total += monomial_value(a, alpha);
  });
  return total;
}

Rational m_by_exponents(const Alphabet& a, const Partition& mu) {
  Rational total = 0;
  for_each_exponent(a.size(), mu.part(0), [&](const std::vector<int>& alpha) {
    std::vector<int> nz;
    for (int x : alpha) {
      if (x) nz.push_back(x);
    }
    std::sort(nz.rbegin(), nz.rend());
    if (nz == std::vector<int>(mu.parts().begin(), mu.parts().end())) total += monomial_value(a, alpha);
  });
  return total;
}

Rational hook_content_value(const Partition& lambda, int t) {
  Rational num = 1;
  for (const auto& c : contents(lambda).values()) num *= t + c;
  return num / Rational(hook_product(lambda));
}

}  // namespace

TEST_CASE("expression parsing and canonical form") {
  const SymExpr a = parse_symexpr("e[2](x)*e[1](x)");
  CHECK(a == SymExpr::term(Basis::e, Partition{2, 1}));
  CHECK(to_string(a) == "e[2,1](x)");
  CHECK(parse_symexpr("e[1]") == SymExpr::term(Basis::e, Partition{1}, 'x'));
  CHECK(parse_symexpr("3/2*p[3](y) - e[1](z)") ==
        SymExpr::term(Basis::p, Partition{3}, 'y', Q("3/2")) - SymExpr::term(Basis::e, Partition{1}, 'z'));
  CHECK(parse_symexpr("s[2,1](x)*s[1](x)").terms().begin()->first.factors().size() == 2);
  CHECK(parse_symexpr("1") == SymExpr::constant(1));
  CHECK(parse_symexpr("e[1](x) - e[1](x)").is_zero());
  CHECK(parse_symexpr("e[2](x)*p[1](y)").weight() == 3);
  CHECK(parse_symexpr("e[2](x)*p[1](y)").slots() == std::set<Slot>{'x', 'y'});
  CHECK(parse_symexpr("e[](x)") == SymExpr::constant(1));

  for (const char* text : {"e[2,1](x)*p[3](y)", "3/2*h[2](z) + 1", "-m[2,1](x) + s[3](y)"}) {
    CAPTURE(text);
    const SymExpr e = parse_symexpr(text);
    CHECK(parse_symexpr(to_string(e)) == e);
  }
}

TEST_CASE("expression parse errors") {
  for (const char* bad : {"", "q[1](x)", "e[1](w)", "e[1,2](x)", "e[1](x) +", "e[1", "e[1](x)*", "2/0"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(parse_symexpr(bad), std::invalid_argument);
  }
}

TEST_CASE("evaluation examples") {
  CHECK(eval_term({Basis::p, Partition{1}, 'x'}, hooks(Partition{3, 1}).squared()) == 22);
  CHECK(eval_term({Basis::e, Partition{4}, 'x'}, ints({1, 2, 3})) == 0);
  CHECK(eval_expr(SymExpr::constant(1), {}) == 1);
  CHECK(eval_expr(parse_symexpr("e[1](x)*e[1](y)"), {{'x', ints({1, 2})}, {'y', ints({3})}}) == 9);
  CHECK(eval_expr(parse_symexpr("e[1,1](x)"), {{'x', contents(Partition{2, 1})}}) == 0);
  CHECK_THROWS_AS(eval_expr(parse_symexpr("e[1](y)"), {{'x', ints({1})}}), std::invalid_argument);
  CHECK(eval_term({Basis::s, Partition{}, 'x'}, ints({})) == 1);
  CHECK(eval_term({Basis::h, Partition{2}, 'x'}, ints({})) == 0);
}

TEST_CASE("e, h, m against direct enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const Alphabet a = testutil::small_alphabet(rng, 1 + rng() % 4);
    AlphabetEvaluator ev(a);
    for (int k = 0; k <= 5; ++k) {
      CHECK(ev.e(k) == e_by_subsets(a, k));
      CHECK(ev.h(k) == h_by_exponents(a, k));
    }
    for (int n = 1; n <= 4; ++n) {
      for (const auto& mu : enumerate_partitions(n)) CHECK(ev.monomial(mu) == m_by_exponents(a, mu));
    }
  }
}

TEST_CASE("monomial guard") {
  AlphabetEvaluator ev(ones(13));
  CHECK_THROWS_AS(ev.monomial(Partition{1}), std::length_error);
  AlphabetEvaluator small(ones(3));
  CHECK(small.monomial(Partition{1, 1}) == 3);
}

TEST_CASE("hook-content specialization") {
  for (const auto& lambda : enumerate_partitions(6)) {
    for (int t = 0; t <= 6; ++t) {
      CAPTURE(to_string(lambda));
      CAPTURE(t);
      CHECK(eval_term({Basis::s, lambda, 'x'}, ones(t)) == hook_content_value(lambda, t));
    }
  }
}

TEST_CASE("characters") {
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{}, Partition{}) == 1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& mu : enumerate_partitions(n)) {
      CHECK(mn_character(Partition{n}, mu) == 1);
      CHECK(mn_character(column, mu) == sign_of_cycle_type(mu));
    }
    for (const auto& lambda : enumerate_partitions(n)) CHECK(mn_character(lambda, column) == syt_count(lambda));
  }
}

TEST_CASE("character orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        Rational inner = 0;
        for (const auto& mu : parts) inner += Rational(mn_character(a, mu) * mn_character(b, mu)) / Rational(z_mu(mu));
        CHECK(inner == (a == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("characters are consistent across threads") {
  const auto parts = enumerate_partitions(9);
  std::vector<Integer> serial;
  for (const auto& l : parts) serial.push_back(mn_character(l, Partition{3, 3, 2, 1}));
  std::vector<std::vector<Integer>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const auto& l : parts) results[t].push_back(mn_character(l, Partition{3, 3, 2, 1}));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == serial);
}

TEST_CASE("centralizer orders") {
  CHECK(z_mu(Partition{1, 1, 1, 1}) == 24);
  CHECK(z_mu(Partition{2, 1}) == 2);
  CHECK(z_mu(Partition{3, 3}) == 18);
  CHECK(z_mu(Partition{}) == 1);
  for (int n = 1; n <= 9; ++n) {
    Rational classes = 0;
    for (const auto& mu : enumerate_partitions(n)) classes += Rational(1) / Rational(z_mu(mu));
    CHECK(classes == 1);
  }
}

TEST_CASE("power sums expand in Schur functions") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    const Alphabet a = testutil::small_alphabet(rng, 4);
    for (const auto& mu : enumerate_partitions(n)) {
      Rational rhs = 0;
      for (const auto& lambda : enumerate_partitions(n)) {
        rhs += Rational(mn_character(lambda, mu)) * eval_term({Basis::s, lambda, 'x'}, a);
      }
      CHECK(eval_term({Basis::p, mu, 'x'}, a) == rhs);
    }
  }
}

TEST_CASE("A_lambda examples") {
  CHECK(a_poly(Partition{1}) == P({"1", "1"}));
  CHECK(a_poly(Partition{2}) == P({"0", "3/2", "1/2"}));
  CHECK(a_poly_combinatorial(Partition{2}) == P({"0", "3/2", "1/2"}));
  CHECK(a_poly(Partition{}) == Poly(1));
  for (long v = -5; v <= 5; ++v) CHECK(is_integer(a_poly(Partition{2, 1})(Rational(v))));
}

TEST_CASE("A_lambda product form equals the skew form") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      CAPTURE(to_string(lambda));
      const Poly a = a_poly(lambda);
      CHECK(a.degree() == n);
      CHECK(a == a_poly_combinatorial(lambda));
      for (long v = -5; v <= 5; ++v) CHECK(is_integer(a(Rational(v))));
    }
  }
}

TEST_CASE("phi on power sums") {
  CHECK(phi_p(Partition{1}) == P({"1", "1"}));
  CHECK(phi_p(Partition{2}) == Poly(-1));
  CHECK(phi_p(Partition{1, 1}) == P({"1", "3", "1"}));
  CHECK_THROWS_AS(phi_p(Partition{}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      CAPTURE(to_string(mu));
      CHECK(phi_p(mu) == phi_p_character_sum(mu));
    }
  }
}

TEST_CASE("Cauchy identities") {
  CHECK(cauchy_check(3, ints({1, 2}), ints({1})));
  CHECK(dual_cauchy_check(2, ints({1}), ints({1, 1})));
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 6; ++n) {
    const Alphabet x = testutil::small_alphabet(rng, 3);
    const Alphabet y = testutil::small_alphabet(rng, 4);
    const auto sides = cauchy_sides(n, x, y);
    CHECK(sides.lhs == sides.rhs);
    CHECK(dual_cauchy_check(n, x, y));
  }
  // a wrong right side is caught: swapping in s_lambda' breaks Cauchy at n = 2
  const auto c = cauchy_sides(2, ints({1, 2}), ints({3}));
  const auto d = dual_cauchy_sides(2, ints({1, 2}), ints({3}));
  CHECK(c.lhs != d.lhs);
}

TEST_CASE("hkm2 identity") {
  const std::vector<Alphabet> two{ints({1, 1}), ints({1, 1, 1})};
  CHECK(hkm2_check(2, 3, two));
  std::mt19937_64 rng(8);
  for (int k = 2; k <= 3; ++k) {
    for (int n = 0; n <= (k == 2 ? 5 : 4); ++n) {
      std::vector<Alphabet> alphabets;
      for (int i = 0; i < k; ++i) alphabets.push_back(testutil::small_alphabet(rng, 3));
      CHECK(hkm2_check(k, n, alphabets));
    }
  }
  CHECK_THROWS_AS(hkm2_check(2, 6, two), std::out_of_range);
  CHECK_THROWS_AS(hkm2_check(4, 2, std::vector<Alphabet>(4, ones(2))), std::out_of_range);
  CHECK_THROWS_AS(hkm2_check(3, 2, two), std::invalid_argument);
}

TEST_CASE("spid identity") {
  CHECK(spid_check(0, Q("3"), ints({1, 2})));
  const auto one = spid_sides(1, Q("2"), ints({1, 1}));
  CHECK(one.lhs == 6);
  CHECK(one.rhs == 6);
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 6; ++n) {
    const Rational v0 = testutil::small_rational(rng);
    CHECK(spid_check(n, v0, testutil::small_alphabet(rng, 6)));
  }
}
