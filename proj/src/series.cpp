#include "hooklab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

Series::Series(unsigned truncation) : truncation_(truncation), coeffs_(truncation + 1) {}

Series::Series(unsigned truncation, std::vector<Poly> coefficients)
    : truncation_(truncation), coeffs_(std::move(coefficients)) {
  coeffs_.resize(truncation + 1);
}

Series Series::one(unsigned truncation) {
  Series s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::from_rationals(unsigned truncation, const std::vector<Rational>& coefficients) {
  std::vector<Poly> polys;
  polys.reserve(coefficients.size());
  for (const auto& c : coefficients) polys.emplace_back(c);
  return Series(truncation, std::move(polys));
}

Series series_mul(const Series& a, const Series& b) {
  const unsigned n = std::min(a.truncation(), b.truncation());
  Series out(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series series_log(const Series& s) {
  if (s[0] != Poly(1)) throw std::domain_error("series_log: constant term must be 1");
  const unsigned n_max = s.truncation();
  Series log_s(n_max);
  // S' = S L'  =>  n L_n = n S_n - sum_{k=1}^{n-1} k L_k S_{n-k}
  for (unsigned n = 1; n <= n_max; ++n) {
    Poly acc = s[n] * Rational(n);
    for (unsigned k = 1; k < n; ++k) {
      if (log_s[k].is_zero() || s[n - k].is_zero()) continue;
      acc -= log_s[k] * s[n - k] * Rational(k);
    }
    log_s[n] = acc / Rational(n);
  }
  return log_s;
}

Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_exp: constant term must be 0");
  const unsigned n_max = s.truncation();
  Series e(n_max);
  e[0] = 1;
  // E' = L' E  =>  n E_n = sum_{k=1}^{n} k L_k E_{n-k}
  for (unsigned n = 1; n <= n_max; ++n) {
    Poly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (s[k].is_zero() || e[n - k].is_zero()) continue;
      acc += s[k] * e[n - k] * Rational(k);
    }
    e[n] = acc / Rational(n);
  }
  return e;
}

Series series_pow_affine_t(const Series& base, const Rational& a, const Rational& b) {
  if (base[0] != Poly(1)) throw std::domain_error("series_pow_affine_t: constant term must be 1");
  Series log_base = series_log(base);
  const Poly exponent(std::vector<Rational>{a, b});
  Series scaled(log_base.truncation());
  for (unsigned n = 0; n <= log_base.truncation(); ++n) scaled[n] = log_base[n] * exponent;
  return series_exp(scaled);
}

Series series_pow(const Series& base, const Rational& alpha) {
  if (base[0] != Poly(1)) throw std::domain_error("series_pow: constant term must be 1");
  const unsigned n_max = base.truncation();
  Series p(n_max);
  p[0] = 1;
  const Rational alpha_plus_one = alpha + 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    Poly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (base[k].is_zero() || p[n - k].is_zero()) continue;
      const Rational weight = alpha_plus_one * k - n;
      acc += base[k] * p[n - k] * weight;
    }
    p[n] = acc / Rational(n);
  }
  return p;
}

Series specialize_t(const Series& s, const Rational& t0) {
  Series out(s.truncation());
  for (unsigned n = 0; n <= s.truncation(); ++n) out[n] = Poly(s[n](t0));
  return out;
}

}  // namespace hooklab
