#ifndef LIKEIPER_SPECIAL_HPP
#define LIKEIPER_SPECIAL_HPP

#include "big_complex.hpp"
#include "big_real.hpp"
#include "constants.hpp"
#include "errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace likeiper {

/// Maximum number of Bernoulli correction terms used by the asymptotic
/// expansions (Euler-Maclaurin tail, Stirling series).
inline constexpr int max_bernoulli_terms = 256;

namespace detail {

/// B_2, B_4, ..., B_{2*max_bernoulli_terms} rounded to `prec`; cached per
/// precision.
inline std::shared_ptr<const std::vector<BigReal>> bernoulli_reals(prec_t prec) {
  static std::mutex mutex;
  static std::map<prec_t, std::shared_ptr<const std::vector<BigReal>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(prec); it != cache.end())
      return it->second;
  }
  auto table = std::make_shared<std::vector<BigReal>>();
  table->reserve(max_bernoulli_terms);
  for (int j = 1; j <= max_bernoulli_terms; ++j)
    table->emplace_back(bernoulli(2 * j), prec);
  std::lock_guard lock(mutex);
  return cache.emplace(prec, std::move(table)).first->second;
}

/// Whether an asymptotic tail whose j-th term has magnitude
/// 2^(log2_term(j)) drops below 2^-bits for some j <= max_bernoulli_terms.
template <typename TermLog2>
bool tail_reaches(double bits, TermLog2 log2_term) {
  for (int j = 1; j <= max_bernoulli_terms; ++j)
    if (log2_term(j) < -bits)
      return true;
  return false;
}

/// Smallest prime factor of every k <= n.
inline std::vector<long> smallest_prime_factors(long n) {
  std::vector<long> spf(static_cast<std::size_t>(n + 1), 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i] != 0)
      continue;
    for (long j = i; j <= n; j += i)
      if (spf[j] == 0)
        spf[j] = i;
  }
  return spf;
}

/// Euler-Maclaurin sum with K head terms. Returns false in `converged` when
/// max_bernoulli_terms corrections were not enough.
inline BigComplex zeta_em_sum(const BigComplex &s, prec_t wp, long K,
                              bool &converged) {
  const auto spf = smallest_prime_factors(K);
  std::vector<BigComplex> powers(static_cast<std::size_t>(K + 1));
  powers[1] = BigComplex(BigReal(1L, wp));
  for (long k = 2; k <= K; ++k) {
    if (spf[k] == k)
      powers[k] = pow_neg(log(BigReal(k, wp)), s);
    else
      powers[k] = powers[spf[k]] * powers[k / spf[k]];
  }

  BigComplex sum(wp);
  for (long k = 1; k < K; ++k)
    sum += powers[k];

  const BigComplex &head = powers[K]; // K^{-s}
  BigComplex s_minus_1 = s - 1L;
  sum += head * BigReal(K, wp) / s_minus_1;
  sum += head / BigReal(2L, wp);

  // term_j = B_{2j} / (2j)! * s (s+1) ... (s+2j-2) * K^{-s-2j+1}
  const auto bern = bernoulli_reals(wp);
  const BigReal k_sq = sqr(BigReal(K, wp));
  BigComplex factor = s * head / BigReal(2L * K, wp);
  const BigReal threshold = pow2(-static_cast<long>(wp) - 8, wp);
  converged = false;
  for (int j = 1; j <= max_bernoulli_terms; ++j) {
    BigComplex term = factor * (*bern)[j - 1];
    sum += term;
    BigReal scale = sum.abs();
    if (scale < 1L)
      scale = BigReal(1L, wp);
    if (term.abs() < threshold * scale) {
      converged = true;
      break;
    }
    factor = factor * ((s + (2L * j - 1)) * (s + 2L * j));
    factor /= k_sq * ((2L * j + 1) * (2L * j + 2));
  }
  return sum;
}

/// Head length K: at least max(prec/2, |Im s|), raised until the Bernoulli
/// tail can reach 2^-(wp+8) within max_bernoulli_terms terms.
inline long zeta_em_head_length(const BigComplex &s, prec_t wp) {
  const double abs_s = s.abs().to_double();
  const double sigma = s.re().to_double();
  // |term_j| ~ 2 |s (s+1) ... (s+2j-2)| K^{1-sigma} / (2 pi K)^{2j}
  auto log2_term = [&](double K) {
    return [=](int j) {
      double rising = 0;
      for (int i = 0; i < 2 * j - 1; ++i)
        rising += std::log2(abs_s + i);
      return 1 + rising + (1 - sigma) * std::log2(K) - 2.0 * j * std::log2(2 * M_PI * K);
    };
  };
  double K = std::max({static_cast<double>(wp) / 2,
                       std::ceil(std::abs(s.im().to_double())), 16.0});
  while (!tail_reaches(static_cast<double>(wp) + 16, log2_term(K)))
    K *= 1.25;
  return static_cast<long>(std::ceil(K));
}

} // namespace detail

struct ZetaOptions {
  /// Recompute with a doubled head length and require agreement.
  bool verify = true;
  /// Cap for the adaptive head length.
  long max_head_terms = 1L << 21;
};

/// Radius around s = 1 inside which zeta_em refuses to evaluate.
inline constexpr long zeta_pole_exclusion_log2 = -16;

/// Riemann zeta by Euler-Maclaurin summation, valid for complex s != 1.
///
/// The head length K starts at max(prec/2, |Im s|) (raised further if the
/// Bernoulli tail would need more than max_bernoulli_terms terms) and doubles
/// until the tail
/// converges. With `verify` set, the value is recomputed with 2K and both
/// results must agree to 2^-(prec-8) relative.
inline BigComplex zeta_em(const BigComplex &s, prec_t prec,
                          const ZetaOptions &options = {}) {
  require_precision(prec);
  {
    BigComplex d = s - 1L;
    if (d.abs() <= pow2(zeta_pole_exclusion_log2, 64))
      throw pole_error("zeta_em: s is within 2^-16 of the pole at s = 1");
  }

  // Guard bits cover cancellation in the head sum, which grows like K.
  const long k_estimate = detail::zeta_em_head_length(s, prec + 48);
  const prec_t wp = prec + 32 +
                    static_cast<prec_t>(std::ceil(std::log2(static_cast<double>(k_estimate))));
  long K = detail::zeta_em_head_length(s, wp);
  const BigComplex sw = s.with_prec(wp);

  bool converged = false;
  BigComplex value(wp);
  for (; K <= options.max_head_terms; K *= 2) {
    value = detail::zeta_em_sum(sw, wp, K, converged);
    if (converged)
      break;
  }
  if (!converged)
    throw precision_failure("zeta_em: Euler-Maclaurin tail did not converge "
                            "within the head-length cap");

  if (options.verify) {
    bool again = false;
    BigComplex check = detail::zeta_em_sum(sw, wp, 2 * K, again);
    BigReal scale = max(value.abs(), BigReal(1L, wp));
    if (!again || (check - value).abs() > pow2(-static_cast<long>(prec) + 8, wp) * scale)
      throw precision_failure("zeta_em: doubled head length disagrees");
  }
  return value.with_prec(prec);
}

/// Real-argument convenience overload.
inline BigReal zeta_em(const BigReal &s, prec_t prec,
                       const ZetaOptions &options = {}) {
  return zeta_em(BigComplex(s), prec, options).re();
}

/// log Gamma(x) for real x > 0, by raising the argument to y where the
/// Stirling series with at most max_bernoulli_terms terms reaches the working
/// precision, then dividing out x (x+1) ... (y-1).
inline BigReal log_gamma(const BigReal &x, prec_t prec) {
  require_precision(prec);
  if (x.sign() <= 0)
    throw std::domain_error("log_gamma: argument must be positive");

  const prec_t wp = prec + 64;
  // Smallest y where the Stirling tail, |term_j| ~ 2 (2j-2)! y / (2 pi y)^{2j},
  // reaches 2^-(wp+8).
  auto log2_term = [](double y) {
    return [=](int j) {
      return 1 + std::lgamma(2.0 * j - 1) / std::log(2.0) + std::log2(y) -
             2.0 * j * std::log2(2 * M_PI * y);
    };
  };
  double y_min = 8;
  while (!detail::tail_reaches(static_cast<double>(wp) + 8, log2_term(y_min)))
    y_min *= 1.25;

  BigReal y = x.with_prec(wp);
  BigReal product(1L, wp + 32);
  while (y.to_double() < y_min) {
    product *= y;
    y += 1L;
  }

  const Constants &c = ConstantsCache::at(wp);
  BigReal log_y = log(y);
  BigReal result = (y - BigReal(0.5, wp)) * log_y - y + c.log2pi / 2L;

  const auto bern = detail::bernoulli_reals(wp);
  const BigReal y_sq = sqr(y);
  BigReal y_pow = y; // y^{2j-1}
  const BigReal threshold = pow2(-static_cast<long>(wp) - 8, wp);
  bool converged = false;
  for (int j = 1; j <= max_bernoulli_terms; ++j) {
    BigReal term = (*bern)[j - 1] / (y_pow * static_cast<long>((2L * j) * (2L * j - 1)));
    result += term;
    if (abs(term) < threshold * max(abs(result), BigReal(1L, wp))) {
      converged = true;
      break;
    }
    y_pow *= y_sq;
  }
  if (!converged)
    throw precision_failure("log_gamma: Stirling series did not converge");

  result -= log(product);
  return result.with_prec(prec);
}

inline BigReal log_gamma(const BigReal &x) { return log_gamma(x, x.prec()); }

} // namespace likeiper

#endif // LIKEIPER_SPECIAL_HPP
