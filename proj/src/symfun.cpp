#include "hooklab/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "hooklab/detail/determinant.hpp"
#include "hooklab/detail/permutations.hpp"

namespace hooklab {

char basis_char(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::e: return 'e';
    case Basis::h: return 'h';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

namespace {

bool multiplicative(Basis b) { return b == Basis::e || b == Basis::h || b == Basis::p; }

Partition merge_indexes(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial / SymExpr

Monomial::Monomial(std::vector<BasisTerm> factors) {
  std::vector<BasisTerm> merged;
  for (auto& f : factors) {
    if (kSlots.find(f.slot) == std::string_view::npos) {
      throw std::invalid_argument(std::string("unknown alphabet slot '") + f.slot + "'");
    }
    if (f.index.empty()) continue;
    if (multiplicative(f.basis)) {
      auto it = std::find_if(merged.begin(), merged.end(),
                             [&](const BasisTerm& g) { return g.basis == f.basis && g.slot == f.slot; });
      if (it != merged.end()) {
        it->index = merge_indexes(it->index, f.index);
        continue;
      }
    }
    merged.push_back(std::move(f));
  }
  std::sort(merged.begin(), merged.end());
  factors_ = std::move(merged);
}

int Monomial::weight() const {
  int w = 0;
  for (const auto& f : factors_) w += f.index.weight();
  return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<BasisTerm> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return Monomial(std::move(all));
}

SymExpr SymExpr::constant(const Rational& c) {
  SymExpr e;
  e.add(Monomial{}, c);
  return e;
}

SymExpr SymExpr::term(Basis basis, Partition index, Slot slot, const Rational& c) {
  SymExpr e;
  e.add(Monomial({BasisTerm{basis, std::move(index), slot}}), c);
  return e;
}

void SymExpr::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymExpr::weight() const {
  int w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

std::set<Slot> SymExpr::slots() const {
  std::set<Slot> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.slot);
  }
  return out;
}

SymExpr& SymExpr::operator+=(const SymExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

SymExpr& SymExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  SymExpr parse() {
    SymExpr result;
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    result += parse_term() * Rational(negative ? -1 : 1);
    for (skip_space(); pos_ < text_.size(); skip_space()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      result += parse_term() * Rational(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  SymExpr parse_term() {
    SymExpr term = parse_factor();
    for (skip_space(); peek() == '*'; skip_space()) {
      get();
      term = term * parse_factor();
    }
    return term;
  }

  SymExpr parse_factor() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return SymExpr::constant(parse_number());
    Basis basis;
    switch (c) {
      case 'm': basis = Basis::m; break;
      case 'e': basis = Basis::e; break;
      case 'h': basis = Basis::h; break;
      case 'p': basis = Basis::p; break;
      case 's': basis = Basis::s; break;
      default: fail("expected a number or a basis letter (m, e, h, p, s)");
    }
    get();
    expect('[');
    std::vector<int> parts;
    skip_space();
    if (peek() != ']') {
      for (;;) {
        skip_space();
        parts.push_back(parse_int());
        skip_space();
        if (peek() == ',') {
          get();
          continue;
        }
        break;
      }
    }
    expect(']');
    Slot slot = 'x';
    skip_space();
    if (peek() == '(') {
      get();
      skip_space();
      slot = get();
      if (kSlots.find(slot) == std::string_view::npos) fail("slot must be x, y or z");
      skip_space();
      expect(')');
    }
    Partition index;
    try {
      index = Partition::from_unsorted(parts);
    } catch (const std::invalid_argument&) {
      fail("invalid index partition");
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
      fail("index parts must be weakly decreasing");
    }
    return SymExpr::term(basis, std::move(index), slot);
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (peek() == '/') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("expected a part");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    return text_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string index_string(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

}  // namespace

SymExpr parse_symexpr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const SymExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : expr.terms()) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const Rational mag = abs(c);
    std::string body;
    for (const auto& f : m.factors()) {
      if (!body.empty()) body += "*";
      body += basis_char(f.basis);
      body += "[" + index_string(f.index) + "](" + f.slot + ")";
    }
    if (body.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

AlphabetEvaluator::AlphabetEvaluator(const Alphabet& alphabet) : values_(alphabet.values()) {
  // e_k from prod (1 + a t); all of them at once.
  elementary_.assign(values_.size() + 1, Rational(0));
  elementary_[0] = 1;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) elementary_[k] += values_[i] * elementary_[k - 1];
  }
  complete_.push_back(1);
  power_sums_.push_back(Rational(static_cast<long>(values_.size())));
}

Rational AlphabetEvaluator::e(int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= elementary_.size()) return 0;
  return elementary_[static_cast<std::size_t>(k)];
}

Rational AlphabetEvaluator::h(int k) {
  if (k < 0) return 0;
  if (static_cast<std::size_t>(k) >= complete_.size()) {
    // h_j(a_1..a_i) = h_j(a_1..a_{i-1}) + a_i h_{j-1}(a_1..a_i)
    const std::size_t top = static_cast<std::size_t>(k);
    std::vector<Rational> h(top + 1, Rational(0));
    h[0] = 1;
    for (const auto& a : values_) {
      for (std::size_t j = 1; j <= top; ++j) h[j] += a * h[j - 1];
    }
    complete_ = std::move(h);
  }
  return complete_[static_cast<std::size_t>(k)];
}

Rational AlphabetEvaluator::p(int k) {
  if (k < 0) return 0;
  while (power_sums_.size() <= static_cast<std::size_t>(k)) {
    const long j = static_cast<long>(power_sums_.size());
    Rational s = 0;
    for (const auto& a : values_) s += power(a, j);
    power_sums_.push_back(s);
  }
  return power_sums_[static_cast<std::size_t>(k)];
}

Rational AlphabetEvaluator::schur(const Partition& lambda) {
  const int l = lambda.length();
  detail::RationalMatrix m(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h(lambda.part(i) - i + j);
  }
  return detail::determinant(std::move(m));
}

Rational AlphabetEvaluator::monomial(const Partition& mu) {
  std::vector<Rational> nonzero;
  for (const auto& a : values_) {
    if (a != 0) nonzero.push_back(a);
  }
  if (mu.length() > static_cast<int>(nonzero.size())) return 0;
  if (nonzero.size() > kMonomialMaxAlphabet) {
    throw std::length_error("monomial basis evaluation is limited to " + std::to_string(kMonomialMaxAlphabet) +
                            " nonzero alphabet values");
  }
  std::vector<int> exponents(nonzero.size(), 0);
  std::copy(mu.parts().begin(), mu.parts().end(), exponents.begin());
  std::sort(exponents.begin(), exponents.end());
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (exponents[i]) term *= power(nonzero[i], exponents[i]);
    }
    total += term;
  } while (std::next_permutation(exponents.begin(), exponents.end()));
  return total;
}

Rational AlphabetEvaluator::eval(Basis basis, const Partition& index) {
  switch (basis) {
    case Basis::s: return schur(index);
    case Basis::m: return monomial(index);
    default: break;
  }
  Rational r = 1;
  for (int part : index.parts()) {
    r *= basis == Basis::e ? e(part) : basis == Basis::h ? h(part) : p(part);
    if (r == 0) break;
  }
  return r;
}

Rational eval_term(const BasisTerm& term, const Alphabet& alphabet) {
  AlphabetEvaluator ev(alphabet);
  return ev.eval(term.basis, term.index);
}

Rational eval_expr(const SymExpr& expr, const Assignment& assignment) {
  std::map<Slot, AlphabetEvaluator> evaluators;
  for (Slot s : expr.slots()) {
    auto it = assignment.find(s);
    if (it == assignment.end()) throw std::invalid_argument(std::string("no alphabet assigned to slot '") + s + "'");
    evaluators.emplace(s, AlphabetEvaluator(it->second));
  }
  Rational total = 0;
  for (const auto& [m, c] : expr.terms()) {
    Rational term = c;
    for (const auto& f : m.factors()) {
      term *= evaluators.at(f.slot).eval(f.basis, f.index);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Characters

namespace {

using CharacterKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex& character_memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<CharacterKey, Integer>& character_memo() {
  static std::map<CharacterKey, Integer> memo;
  return memo;
}

// lambda: partition parts; mu: remaining cycle lengths, largest first.
Integer character_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  CharacterKey key{lambda, mu};
  {
    std::lock_guard lock(character_memo_mutex());
    auto it = character_memo().find(key);
    if (it != character_memo().end()) return it->second;
  }
  const int k = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int beads = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < beads; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;

  Integer total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int target = beta[b] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Removing a border strip of length k moves one bead k positions down;
    // its height is the number of beads jumped over.
    const auto jumped = std::count_if(beta.begin(), beta.end(), [&](int x) { return x > target && x < beta[b]; });
    std::vector<int> moved = beta;
    moved[b] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int i = 0; i < beads; ++i) {
      const int part = moved[static_cast<std::size_t>(i)] - (beads - 1 - i);
      if (part > 0) smaller.push_back(part);
    }
    const Integer sub = character_rec(smaller, rest);
    if (jumped % 2) total -= sub;
    else total += sub;
  }
  std::lock_guard lock(character_memo_mutex());
  character_memo().emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("mn_character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  }
  return character_rec(std::vector<int>(lambda.parts().begin(), lambda.parts().end()),
                       std::vector<int>(mu.parts().begin(), mu.parts().end()));
}

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  for (int i = 0; i < mu.length();) {
    const int part = mu.part(i);
    const int m = mu.multiplicity(part);
    z *= power(Integer(part), static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
    i += m;
  }
  return z;
}

int sign_of_cycle_type(const Partition& mu) { return (mu.weight() - mu.length()) % 2 ? -1 : 1; }

// ---------------------------------------------------------------------------
// The phi map

Poly a_poly(const Partition& lambda) {
  const int n = lambda.weight();
  Poly out = 1;
  for (const auto& rho : shifted_parts(lambda, n).values()) out *= Poly(std::vector<Rational>{rho, Rational(1)});
  return out / Rational(hook_product(lambda));
}

Poly a_poly_combinatorial(const Partition& lambda) {
  const int n = lambda.weight();
  Poly out;
  for (int i = 0; i <= n; ++i) {
    const int column = n - i;
    if (column > lambda.length()) continue;
    const Partition inner(std::vector<int>(static_cast<std::size_t>(column), 1));
    const Integer f = skew_syt_count(SkewShape(lambda, inner));
    out += multiset_binomial(static_cast<unsigned>(i)) * Rational(f);
  }
  return out;
}

Poly phi_p(const Partition& mu) {
  if (mu.empty()) throw std::invalid_argument("phi_p: mu must be nonempty");
  const int m = mu.multiplicity(1);
  Poly out;
  for (int i = 0; i <= m; ++i) out += rising_factorial(static_cast<unsigned>(i)) * Rational(binomial(m, i));
  return out * Rational(sign_of_cycle_type(mu));
}

Poly phi_p_character_sum(const Partition& mu) {
  Poly out;
  for (const auto& lambda : enumerate_partitions(mu.weight())) {
    const Integer chi = mn_character(lambda, mu);
    if (chi != 0) out += a_poly(lambda) * Rational(chi);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numeric identity checks

IdentitySides cauchy_sides(int n, const Alphabet& x, const Alphabet& y) {
  AlphabetEvaluator ex(x), ey(y);
  IdentitySides sides{0, 0};
  for (const auto& lambda : enumerate_partitions(n)) {
    sides.lhs += ex.schur(lambda) * ey.schur(lambda);
    sides.rhs += ex.eval(Basis::p, lambda) * ey.eval(Basis::p, lambda) / Rational(z_mu(lambda));
  }
  return sides;
}

bool cauchy_check(int n, const Alphabet& x, const Alphabet& y) { return cauchy_sides(n, x, y).holds(); }

IdentitySides dual_cauchy_sides(int n, const Alphabet& x, const Alphabet& y) {
  AlphabetEvaluator ex(x), ey(y);
  IdentitySides sides{0, 0};
  for (const auto& lambda : enumerate_partitions(n)) {
    sides.lhs += ex.schur(lambda) * ey.schur(lambda.conjugate());
    sides.rhs += ex.eval(Basis::p, lambda) * ey.eval(Basis::p, lambda) * sign_of_cycle_type(lambda) /
                 Rational(z_mu(lambda));
  }
  return sides;
}

bool dual_cauchy_check(int n, const Alphabet& x, const Alphabet& y) { return dual_cauchy_sides(n, x, y).holds(); }

IdentitySides hkm2_sides(int k, int n, std::span<const Alphabet> alphabets) {
  if (k < 1 || k > kHkm2MaxK || n < 0 || n > kHkm2MaxN) {
    throw std::out_of_range("hkm2_check requires 1 <= k <= " + std::to_string(kHkm2MaxK) + " and 0 <= n <= " +
                            std::to_string(kHkm2MaxN));
  }
  if (alphabets.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("hkm2_check needs exactly k alphabets");
  }
  std::vector<AlphabetEvaluator> ev(alphabets.begin(), alphabets.end());

  IdentitySides sides{0, 0};
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational term = power(Rational(hook_product(lambda)), k - 2);
    for (auto& e : ev) term *= e.schur(lambda);
    sides.lhs += term;
  }

  // Right side: w_1 .. w_{k-1} range over S_n, w_k is the inverse of their product.
  std::vector<std::map<Partition, Rational>> power_cache(static_cast<std::size_t>(k));
  auto p_at = [&](int slot, const Partition& rho) -> const Rational& {
    auto& cache = power_cache[static_cast<std::size_t>(slot)];
    auto it = cache.find(rho);
    if (it == cache.end()) it = cache.emplace(rho, ev[static_cast<std::size_t>(slot)].eval(Basis::p, rho)).first;
    return it->second;
  };
  std::vector<detail::Perm> all;
  detail::for_each_permutation(n, [&](const detail::Perm& w) { all.push_back(w); });
  std::vector<Partition> types;
  types.reserve(all.size());
  for (const auto& w : all) types.push_back(detail::cycle_type(w));

  Rational total = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k - 1), 0);
  detail::Perm prod(static_cast<std::size_t>(n)), tmp(static_cast<std::size_t>(n));
  for (;;) {
    prod = detail::identity_permutation(n);
    Rational term = 1;
    for (int i = 0; i < k - 1; ++i) {
      const auto& w = all[idx[static_cast<std::size_t>(i)]];
      detail::compose(prod, w, tmp);
      std::swap(prod, tmp);
      term *= p_at(i, types[idx[static_cast<std::size_t>(i)]]);
    }
    // The inverse of prod has the same cycle type as prod.
    term *= p_at(k - 1, detail::cycle_type(prod));
    total += term;

    int pos = k - 2;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == all.size()) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  sides.rhs = total / Rational(factorial(static_cast<unsigned long>(n)));
  return sides;
}

bool hkm2_check(int k, int n, std::span<const Alphabet> alphabets) { return hkm2_sides(k, n, alphabets).holds(); }

IdentitySides spid_sides(int n, const Rational& v0, const Alphabet& alphabet) {
  AlphabetEvaluator ev(alphabet);
  IdentitySides sides{0, 0};
  for (int i = 0; i <= n; ++i) {
    sides.lhs += multiset_binomial(static_cast<unsigned>(i))(v0) * power(ev.p(1), i) * ev.e(n - i);
  }
  for (const auto& lambda : enumerate_partitions(n)) sides.rhs += a_poly(lambda)(v0) * ev.schur(lambda);
  return sides;
}

bool spid_check(int n, const Rational& v0, const Alphabet& alphabet) { return spid_sides(n, v0, alphabet).holds(); }

}  // namespace hooklab
