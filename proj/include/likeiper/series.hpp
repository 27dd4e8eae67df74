#ifndef LIKEIPER_SERIES_HPP
#define LIKEIPER_SERIES_HPP

#include "big_real.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Name of the indeterminate a truncated series is expanded in.
enum class Variable { Z, U };

inline const char *to_string(Variable v) { return v == Variable::Z ? "z" : "u"; }

/// Taylor polynomial c_0 + c_1 x + ... + c_order x^order in a tagged
/// indeterminate. Values are immutable once built.
class TruncatedSeries {
public:
  TruncatedSeries(Variable var, std::vector<BigReal> coeffs)
      : var_(var), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
  }

  /// The zero series of the given order.
  static TruncatedSeries zero(Variable var, std::size_t order, prec_t prec) {
    return {var, std::vector<BigReal>(order + 1, BigReal(prec))};
  }

  /// 1 + 0 x + ... at the given order.
  static TruncatedSeries one(Variable var, std::size_t order, prec_t prec) {
    auto s = std::vector<BigReal>(order + 1, BigReal(prec));
    s[0] = BigReal(1L, prec);
    return {var, std::move(s)};
  }

  /// The indeterminate x itself (order >= 1).
  static TruncatedSeries identity(Variable var, std::size_t order, prec_t prec) {
    auto s = std::vector<BigReal>(std::max<std::size_t>(order, 1) + 1, BigReal(prec));
    s[1] = BigReal(1L, prec);
    return {var, std::move(s)};
  }

  Variable variable() const { return var_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<BigReal> &coeffs() const { return coeffs_; }
  const BigReal &operator[](std::size_t k) const { return coeffs_.at(k); }

  prec_t prec() const {
    prec_t p = min_precision;
    for (const auto &c : coeffs_)
      p = std::max(p, c.prec());
    return p;
  }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order())
      throw std::invalid_argument("truncated: order exceeds available coefficients");
    return {var_, std::vector<BigReal>(coeffs_.begin(), coeffs_.begin() + order + 1)};
  }

  TruncatedSeries with_variable(Variable var) const { return {var, coeffs_}; }

private:
  Variable var_;
  std::vector<BigReal> coeffs_;
};

namespace detail {
inline void require_same_variable(const TruncatedSeries &a, const TruncatedSeries &b,
                                  const char *op) {
  if (a.variable() != b.variable())
    throw std::invalid_argument(std::string(op) + ": variable mismatch (" +
                                to_string(a.variable()) + " vs " +
                                to_string(b.variable()) + ")");
}
} // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
  detail::require_same_variable(a, b, "series_add");
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigReal> out;
  out.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    out.push_back(a[k] + b[k]);
  return {a.variable(), std::move(out)};
}

inline TruncatedSeries series_sub(const TruncatedSeries &a, const TruncatedSeries &b) {
  detail::require_same_variable(a, b, "series_sub");
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<BigReal> out;
  out.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    out.push_back(a[k] - b[k]);
  return {a.variable(), std::move(out)};
}

inline TruncatedSeries series_scale(const TruncatedSeries &a, const BigReal &factor) {
  std::vector<BigReal> out;
  out.reserve(a.order() + 1);
  for (const auto &c : a.coeffs())
    out.push_back(c * factor);
  return {a.variable(), std::move(out)};
}

/// Cauchy product truncated at min(order_a, order_b).
inline TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  detail::require_same_variable(a, b, "series_mul");
  const std::size_t order = std::min(a.order(), b.order());
  const prec_t p = std::max(a.prec(), b.prec());
  std::vector<BigReal> out(order + 1, BigReal(p));
  BigReal t(p);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      mpfr_mul(t.raw(), a[k].raw(), b[n - k].raw(), MPFR_RNDN);
      mpfr_add(out[n].raw(), out[n].raw(), t.raw(), MPFR_RNDN);
    }
  return {a.variable(), std::move(out)};
}

/// log(a) for a series with unit constant term, from (log a)' = a'/a:
///   n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
inline TruncatedSeries series_log(const TruncatedSeries &a) {
  const prec_t p = a.prec();
  if (scaled_distance(a[0], BigReal(1L, p)) > pow2(-static_cast<long>(p) + 8, p))
    throw std::invalid_argument("series_log: constant term must be 1, got " +
                                a[0].to_string(12));
  const std::size_t order = a.order();
  std::vector<BigReal> l(order + 1, BigReal(p));
  BigReal t(p);
  for (std::size_t n = 1; n <= order; ++n) {
    BigReal acc = a[n] * static_cast<long>(n);
    for (std::size_t k = 1; k < n; ++k) {
      mpfr_mul(t.raw(), l[k].raw(), a[n - k].raw(), MPFR_RNDN);
      mpfr_mul_ui(t.raw(), t.raw(), k, MPFR_RNDN);
      mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    l[n] = acc / a[0] / static_cast<long>(n);
  }
  return {a.variable(), std::move(l)};
}

/// exp(a) for a series with zero constant term, from e' = a' e:
///   n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries &a) {
  const prec_t p = a.prec();
  if (!a[0].is_zero())
    throw std::invalid_argument("series_exp: constant term must be 0, got " +
                                a[0].to_string(12));
  const std::size_t order = a.order();
  std::vector<BigReal> e(order + 1, BigReal(p));
  e[0] = BigReal(1L, p);
  BigReal t(p);
  for (std::size_t n = 1; n <= order; ++n) {
    BigReal acc(p);
    for (std::size_t k = 1; k <= n; ++k) {
      mpfr_mul(t.raw(), a[k].raw(), e[n - k].raw(), MPFR_RNDN);
      mpfr_mul_ui(t.raw(), t.raw(), k, MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    e[n] = acc / static_cast<long>(n);
  }
  return {a.variable(), std::move(e)};
}

/// outer(inner(x)) truncated at the order of inner, by Horner's rule over
/// series. The result is expanded in inner's variable.
inline TruncatedSeries series_compose(const TruncatedSeries &outer,
                                      const TruncatedSeries &inner) {
  if (!inner[0].is_zero())
    throw std::invalid_argument("series_compose: inner constant term must be 0");
  const std::size_t order = inner.order();
  const std::size_t top = std::min(outer.order(), order);
  const prec_t p = std::max(outer.prec(), inner.prec());

  auto acc = TruncatedSeries::zero(inner.variable(), order, p);
  for (std::size_t m = top + 1; m-- > 0;) {
    acc = series_mul(acc, inner);
    std::vector<BigReal> c = acc.coeffs();
    c[0] += outer[m];
    acc = TruncatedSeries(inner.variable(), std::move(c));
  }
  return acc;
}

/// Exact binomial coefficient C(n, k) for machine-size arguments.
inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Pulls a series in u back along u = z/(1-z). Because
/// u^m = sum_{n>=m} C(n-1, m-1) z^n,
///   b_n = sum_{m=1}^{min(n, M)} C(n-1, m-1) a_m.
/// Binomials are exact integers; each product is rounded once at the
/// working precision max(prec(a), 2*order+64).
inline TruncatedSeries binomial_pullback(const TruncatedSeries &a, std::size_t order) {
  if (a.variable() != Variable::U)
    throw std::invalid_argument("binomial_pullback: input must be a series in u");
  if (!a[0].is_zero())
    throw std::invalid_argument("binomial_pullback: constant term must be 0");
  const prec_t p = std::max<prec_t>(a.prec(), 2 * static_cast<prec_t>(order) + 64);
  std::vector<BigReal> b(order + 1, BigReal(p));
  BigReal t(p);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t top = std::min(n, a.order());
    for (std::size_t m = 1; m <= top; ++m) {
      mpz_class c = binomial(n - 1, m - 1);
      mpfr_mul_z(t.raw(), a[m].raw(), c.get_mpz_t(), MPFR_RNDN);
      mpfr_add(b[n].raw(), b[n].raw(), t.raw(), MPFR_RNDN);
    }
  }
  return {Variable::Z, std::move(b)};
}

/// u(z) = z/(1-z) = z + z^2 + ... as a series in z.
inline TruncatedSeries u_of_z(std::size_t order, prec_t prec) {
  std::vector<BigReal> c(order + 1, BigReal(1L, prec));
  c[0] = BigReal(prec);
  return {Variable::Z, std::move(c)};
}

} // namespace likeiper

#endif // LIKEIPER_SERIES_HPP
