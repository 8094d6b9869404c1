#include "hooklab/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hooklab/functional.hpp"
#include "hooklab/series_lab.hpp"
#include "hooklab/symfun.hpp"

namespace hooklab {

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  const auto span = static_cast<std::uint64_t>(2 * max_num + 1);
  const long num = static_cast<long>(rng() % span) - max_num;
  const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
  return make_rational(num, den);
}

Alphabet random_alphabet(std::mt19937_64& rng, std::size_t size) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_rational(rng));
  return Alphabet(std::move(v));
}

namespace {

using FamilyFn = std::function<std::vector<CheckRecord>(int, const VerifyOptions&)>;

CheckRecord record(std::string_view family, std::string label, bool passed, std::string detail = {}) {
  return {std::string(family), std::move(label), passed, std::move(detail)};
}

std::string sides_detail(const IdentitySides& s) { return "lhs=" + to_string(s.lhs) + " rhs=" + to_string(s.rhs); }

std::mt19937_64 family_rng(const VerifyOptions& options, std::uint64_t salt) {
  return std::mt19937_64(options.seed * 1000003ULL + salt);
}

std::vector<CheckRecord> verify_syt(int max_n, const VerifyOptions&) {
  std::vector<CheckRecord> out;
  for (int n = 0; n <= max_n; ++n) {
    Integer sum = 0;
    for (const auto& lambda : enumerate_partitions(n)) {
      const Integer f = syt_count(lambda);
      sum += f * f;
    }
    const Integer expected = factorial(static_cast<unsigned long>(n));
    out.push_back(record("syt", "sum f^2 = n! n=" + std::to_string(n), sum == expected, "sum=" + to_string(sum)));
  }
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    std::string bad;
    for (const auto& lambda : enumerate_partitions(n)) {
      if (syt_count(lambda) != syt_count_bruteforce(lambda)) bad += to_string(lambda) + " ";
    }
    out.push_back(record("syt", "hook formula = enumeration n=" + std::to_string(n), bad.empty(), bad));
  }
  return out;
}

std::vector<CheckRecord> verify_mset(int max_n, const VerifyOptions&) {
  std::vector<CheckRecord> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto parts = enumerate_partitions(n);
    std::string bad;
    for (const auto& lambda : parts) {
      if (!multiset_lemma_check(lambda)) bad += to_string(lambda) + " ";
    }
    out.push_back(record("mset", "n=" + std::to_string(n), bad.empty(),
                         bad.empty() ? std::to_string(parts.size()) + " partitions" : "fails for " + bad));
  }
  return out;
}

std::vector<CheckRecord> verify_table(std::string_view family, const std::vector<TableEntry>& table,
                                      FunctionalSpec (*make_spec)(const Partition&), bool degree_law, int max_n,
                                      const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  for (const auto& entry : table) {
    const std::string mu = to_string(entry.mu);
    out.push_back(record(family, "fit mu=" + mu, entry.matches(),
                         "fitted " + to_string(entry.fit.polynomial) + (entry.fit.verified ? "" : " (unverified)")));
    const FunctionalSpec spec = make_spec(entry.mu);
    std::string bad;
    for (int n = 0; n <= max_n; ++n) {
      if (functional_value(spec, n, options.jobs) != entry.golden(Rational(n))) bad += std::to_string(n) + " ";
    }
    out.push_back(record(family, "values mu=" + mu + " n<=" + std::to_string(max_n), bad.empty(),
                         bad.empty() ? "" : "differs at n=" + bad));
    if (degree_law) {
      out.push_back(record(family, "degree mu=" + mu, entry.fit.polynomial.degree() == entry.mu.weight(),
                           "degree " + std::to_string(entry.fit.polynomial.degree())));
      bool zeros = true;
      for (int n = 0; n < 1 + entry.mu.part(0); ++n) zeros = zeros && entry.golden(Rational(n)) == 0;
      out.push_back(record(family, "vanishing below 1+mu_1 mu=" + mu, zeros));
    }
  }
  return out;
}

std::vector<CheckRecord> verify_nmu(int max_n, const VerifyOptions& options) {
  return verify_table("nmu", n_mu_table(options.jobs), n_mu_spec, true, max_n, options);
}

std::vector<CheckRecord> verify_phimu(int max_n, const VerifyOptions& options) {
  return verify_table("phimu", phi_e_mu_table(options.jobs), phi_e_mu_spec, false, max_n, options);
}

std::vector<CheckRecord> verify_no(int max_n, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  const Series lhs = no_lhs(max_n, options.jobs);
  const Series rhs = no_rhs(max_n);
  out.push_back(record("no", "lhs = rhs in Q[t] N=" + std::to_string(max_n), lhs == rhs));
  const auto p = partition_numbers(max_n);
  bool t0 = true;
  bool leading = true;
  for (int n = 0; n <= max_n; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    t0 = t0 && lhs[idx].coefficient(0) == Rational(p[idx]) && rhs[idx].coefficient(0) == Rational(p[idx]);
    leading = leading && lhs[idx].degree() == n &&
              lhs[idx].leading_coefficient() == Rational(Integer(1), factorial(static_cast<unsigned long>(n)));
  }
  out.push_back(record("no", "t=0 gives partition numbers", t0));
  out.push_back(record("no", "x^n coefficient has t-degree n, leading 1/n!", leading));
  return out;
}

std::vector<CheckRecord> verify_cno(int max_n, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  const Series lhs = cno_lhs(max_n, options.jobs);
  out.push_back(record("cno", "lhs = (1-x)^(-t) N=" + std::to_string(max_n), lhs == cno_rhs(max_n)));
  bool binomials = true;
  for (long t0 = 1; t0 <= 4; ++t0) {
    for (int n = 0; n <= max_n; ++n) {
      binomials = binomials && lhs[static_cast<std::size_t>(n)](Rational(t0)) == Rational(binomial(t0 + n - 1, n));
    }
  }
  out.push_back(record("cno", "t=1..4 gives binom(t+n-1, n)", binomials));
  return out;
}

std::vector<CheckRecord> verify_twoparam(int max_n, const VerifyOptions& options) {
  auto rng = family_rng(options, 3);
  std::vector<Rational> ts, vs;
  for (int i = 0; i < 5; ++i) ts.push_back(random_rational(rng));
  for (int i = 0; i < 5; ++i) vs.push_back(random_rational(rng));
  std::vector<GridPoint> grid{{0, make_rational(7, 3)}, {1, 1}};
  for (const auto& t : ts) {
    for (const auto& v : vs) grid.push_back({t, v});
  }
  std::vector<CheckRecord> out;
  for (const auto& point : grid) {
    const GridPoint one[] = {point};
    out.push_back(record("twoparam", "t=" + to_string(point.t) + " v=" + to_string(point.v) + " N=" + std::to_string(max_n),
                         two_param_check(max_n, one, options.jobs)));
  }
  return out;
}

std::vector<CheckRecord> sweep(std::string_view family, const std::string& label, int max_n,
                               const std::function<IdentitySides(int)>& sides_at) {
  std::string bad;
  for (int n = 0; n <= max_n; ++n) {
    const IdentitySides s = sides_at(n);
    if (!s.holds()) bad += "n=" + std::to_string(n) + " " + sides_detail(s) + "; ";
  }
  return {record(family, label + " n<=" + std::to_string(max_n), bad.empty(), bad)};
}

void append(std::vector<CheckRecord>& out, std::vector<CheckRecord> more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::vector<CheckRecord> verify_okada(int max_n, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  for (int r = 0; r <= kOkadaMaxOrder; ++r) {
    append(out, sweep("okada", "content products r=" + std::to_string(r), max_n,
                      [&](int n) { return okada_sides(r, n, options.jobs); }));
  }
  for (int k = 1; k <= kOkadaMaxOrder; ++k) {
    append(out, sweep("okada", "content powers k=" + std::to_string(k), max_n,
                      [&](int n) { return okada_power_sides(k, n, options.jobs); }));
  }
  return out;
}

std::vector<CheckRecord> verify_panova(int max_n, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  for (int r = 0; r <= 3; ++r) {
    append(out, sweep("panova", "hook products r=" + std::to_string(r), max_n,
                      [&](int n) { return panova_sides(r, n, options.jobs); }));
  }
  for (int k = 0; k <= 3; ++k) {
    append(out, sweep("panova", "hook powers k=" + std::to_string(k), max_n,
                      [&](int n) { return hook_power_sides(k, n, options.jobs); }));
  }
  return out;
}

std::vector<CheckRecord> verify_hkm2(int max_n, const VerifyOptions& options) {
  auto rng = family_rng(options, 11);
  std::vector<CheckRecord> out;
  for (int k = 2; k <= 3; ++k) {
    std::vector<Alphabet> alphabets;
    for (int i = 0; i < k; ++i) alphabets.push_back(random_alphabet(rng, 3));
    std::string label = "k=" + std::to_string(k);
    for (const auto& a : alphabets) label += " " + to_string(a);
    append(out, sweep("hkm2", label, max_n, [&](int n) { return hkm2_sides(k, n, alphabets); }));
  }
  return out;
}

std::vector<CheckRecord> verify_cauchy(int max_n, const VerifyOptions& options) {
  auto rng = family_rng(options, 17);
  const Alphabet x = random_alphabet(rng, 4);
  const Alphabet y = random_alphabet(rng, 3);
  std::vector<CheckRecord> out;
  append(out, sweep("cauchy", "cauchy x=" + to_string(x) + " y=" + to_string(y), max_n,
                    [&](int n) { return cauchy_sides(n, x, y); }));
  append(out, sweep("cauchy", "dual cauchy", max_n, [&](int n) { return dual_cauchy_sides(n, x, y); }));
  return out;
}

std::vector<CheckRecord> verify_spid(int max_n, const VerifyOptions& options) {
  auto rng = family_rng(options, 23);
  std::vector<Rational> v0s;
  for (int i = 0; i < 5; ++i) v0s.push_back(random_rational(rng));
  std::vector<Alphabet> alphabets;
  for (int i = 0; i < 3; ++i) alphabets.push_back(random_alphabet(rng, 7));
  std::string sample = " v0=";
  for (std::size_t i = 0; i < v0s.size(); ++i) sample += (i ? "," : "") + to_string(v0s[i]);
  sample += " x 3 alphabets";
  std::vector<CheckRecord> out;
  for (int n = 0; n <= max_n; ++n) {
    std::string bad;
    for (const auto& v0 : v0s) {
      for (const auto& a : alphabets) {
        const IdentitySides s = spid_sides(n, v0, a);
        if (!s.holds()) bad += "v0=" + to_string(v0) + " " + sides_detail(s) + "; ";
      }
    }
    out.push_back(record("spid", "n=" + std::to_string(n) + sample, bad.empty(), bad));
  }
  return out;
}

std::vector<CheckRecord> verify_vphi(int max_n, const VerifyOptions&) {
  std::vector<CheckRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = enumerate_partitions(n);
    std::string phi_bad, a_bad, int_bad, chi_bad;
    for (const auto& mu : parts) {
      if (phi_p(mu) != phi_p_character_sum(mu)) phi_bad += to_string(mu) + " ";
    }
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : parts) {
      const Poly a = a_poly(lambda);
      if (a != a_poly_combinatorial(lambda)) a_bad += to_string(lambda) + " ";
      for (long v = -5; v <= 5; ++v) {
        if (!is_integer(a(Rational(v)))) {
          int_bad += to_string(lambda) + "@" + std::to_string(v) + " ";
          break;
        }
      }
      if (mn_character(lambda, ones) != syt_count(lambda)) chi_bad += to_string(lambda) + " ";
    }
    const std::string sn = "n=" + std::to_string(n);
    out.push_back(record("vphi", "phi(p_mu) closed form = character sum " + sn, phi_bad.empty(), phi_bad));
    out.push_back(record("vphi", "A_lambda product = skew form " + sn, a_bad.empty(), a_bad));
    out.push_back(record("vphi", "A_lambda integral on [-5,5] " + sn, int_bad.empty(), int_bad));
    out.push_back(record("vphi", "chi(1^n) = f_lambda " + sn, chi_bad.empty(), chi_bad));
  }
  return out;
}

std::vector<CheckRecord> verify_conid(int max_n, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  const std::vector<std::pair<Partition, int>> cases = {
      {Partition{1, 1}, std::min(max_n, 10)}, {Partition{2, 1}, std::min(max_n, 10)},
      {Partition{3, 1}, std::min(max_n, 10)}, {Partition{2, 2}, std::min(max_n, 10)},
      {Partition{1, 1, 1}, std::min(max_n, 6)}, {Partition{2, 1, 1}, std::min(max_n, 6)},
  };
  for (const auto& [mu, top] : cases) {
    std::string bad;
    for (int n = 1; n <= top; ++n) {
      const Integer count = conid_bruteforce(mu, n);
      const Rational value = functional_value(n_mu_spec(mu), n, options.jobs);
      if (Rational(count) != value) bad += "n=" + std::to_string(n) + " count=" + to_string(count) + " functional=" + to_string(value) + "; ";
    }
    out.push_back(record("conid", "mu=" + to_string(mu) + " n<=" + std::to_string(top), bad.empty(), bad));
  }
  return out;
}

std::vector<CheckRecord> verify_variants(int, const VerifyOptions& options) {
  std::vector<CheckRecord> out;
  const FunctionalSpec squares{parse_symexpr("p[2](y)"), {{'y', AlphabetKind::parts}}};
  const Rational at3 = functional_value(squares, 3, options.jobs);
  out.push_back(record("variants", "sum lambda_i^2 at n=3 is 16/3", at3 == make_rational(16, 3), to_string(at3)));
  out.push_back(record("variants", "sum lambda_i^2 at n=3 is not an integer", !is_integer(at3)));
  FitOptions fit_options;
  fit_options.jobs = options.jobs;
  const FitReport parts_fit = fit_functional(squares, fit_options);
  out.push_back(record("variants", "sum lambda_i^2 is not polynomial within cap", !parts_fit.verified,
                       "tried up to degree " + std::to_string(parts_fit.degree_tried)));
  for (const char* text : {"e[1](y)", "e[1,1](y)", "p[2](y)", "e[2](x)*e[1](y)"}) {
    const FunctionalSpec spec{parse_symexpr(text), {{'x', AlphabetKind::contents}, {'y', AlphabetKind::shifted_parts}}};
    const FitReport shifted = fit_functional(spec, fit_options);
    const FitReport minus = fit_functional(shifted_to_minus_index(spec), fit_options);
    out.push_back(record("variants", std::string("shifted parts polynomial: ") + text, shifted.verified,
                         to_string(shifted.polynomial)));
    out.push_back(record("variants", std::string("lambda_i - i polynomial: ") + text, minus.verified,
                         to_string(minus.polynomial)));
  }
  return out;
}

struct Family {
  FamilyInfo info;
  FamilyFn fn;
};

const std::vector<Family>& families() {
  static const std::vector<Family> all = {
      {{"syt", 20, 30, "sum of f^2 equals n!; hook formula equals enumeration"}, verify_syt},
      {{"mset", 12, 14, "hook / content multiset lemma"}, verify_mset},
      {{"nmu", 12, 14, "content polynomials N_mu"}, verify_nmu},
      {{"phimu", 12, 14, "squared-hook polynomials Phi_n(e_mu)"}, verify_phimu},
      {{"no", 12, kSeriesMaxOrder, "Nekrasov-Okounkov product formula"}, verify_no},
      {{"cno", 14, kSeriesMaxOrder, "content Nekrasov-Okounkov formula"}, verify_cno},
      {{"twoparam", 10, kTwoParamMaxOrder, "two-parameter content formula"}, verify_twoparam},
      {{"okada", 12, kOkadaMaxN, "content product and power sums"}, verify_okada},
      {{"panova", 12, kOkadaMaxN, "hook product and power sums"}, verify_panova},
      {{"hkm2", 5, kHkm2MaxN, "Schur / permutation product identity"}, verify_hkm2},
      {{"cauchy", 7, 10, "Cauchy and dual Cauchy identities"}, verify_cauchy},
      {{"spid", 7, 9, "shifted-parts Schur expansion"}, verify_spid},
      {{"vphi", 8, 10, "phi(p_mu) closed form and A_lambda"}, verify_vphi},
      {{"conid", 8, 10, "content sums as permutation counts"}, verify_conid},
      {{"variants", 0, 0, "lambda_i - i variant and lambda_i negative control"}, verify_variants},
  };
  return all;
}

}  // namespace

const std::vector<FamilyInfo>& verify_families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> v;
    for (const auto& f : families()) v.push_back(f.info);
    return v;
  }();
  return infos;
}

std::vector<CheckRecord> run_verify(std::string_view family, const VerifyOptions& options) {
  if (options.max_n && *options.max_n < 0) throw std::out_of_range("--max-n must be nonnegative");
  if (family == "all") {
    std::vector<CheckRecord> out;
    for (const auto& f : families()) {
      const int n = options.max_n ? std::min(*options.max_n, f.info.default_max_n) : f.info.default_max_n;
      append(out, f.fn(n, options));
    }
    return out;
  }
  for (const auto& f : families()) {
    if (f.info.name != family) continue;
    const int n = options.max_n.value_or(f.info.default_max_n);
    if (f.info.guard_max_n > 0 && n > f.info.guard_max_n) {
      throw std::out_of_range("verify " + std::string(family) + ": --max-n " + std::to_string(n) +
                              " exceeds the guard " + std::to_string(f.info.guard_max_n));
    }
    return f.fn(n, options);
  }
  throw std::invalid_argument("unknown verification family '" + std::string(family) + "'");
}

}  // namespace hooklab
