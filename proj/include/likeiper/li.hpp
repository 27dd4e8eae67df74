#ifndef LIKEIPER_LI_HPP
#define LIKEIPER_LI_HPP

#include "big_complex.hpp"
#include "big_real.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "series.hpp"
#include "special.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Parameters of the Cauchy-circle extraction of the Stieltjes constants.
struct CircleOptions {
  /// Radius r of the circle |u| = r around s = 1; must lie in (0, 1/2).
  double radius = 0.25;
  /// Initial number of sample points; 0 selects 8 * count.
  long dft_points = 0;
  /// Cap for the doubling of the sample count.
  long max_points = 1L << 15;
};

/// Stieltjes constants gamma_0 .. gamma_{count-1}, defined by
///   (s-1) zeta(s) = 1 + sum_{k>=0} (-1)^k gamma_k (s-1)^{k+1} / k!.
struct StieltjesSet {
  std::vector<BigReal> values;
  double circle_radius = 0;
  long dft_points = 0; ///< sample count of the accepted (finest) level
  prec_t prec = 0;
  /// Taylor coefficients c_0 .. c_count of u zeta(1+u), at the internal
  /// working precision (c_0 is normalised to exactly 1).
  std::vector<BigReal> taylor;
};

namespace detail {

inline void check_circle(const CircleOptions &opt) {
  if (!(opt.radius > 0 && opt.radius < 0.5))
    throw std::invalid_argument("circle radius must lie in (0, 1/2)");
}

/// Extra bits needed so that c_k / r^k and k! c_k keep full precision.
inline prec_t circle_guard_bits(long count, double radius) {
  const double lost = count * std::log2(1.0 / radius) +
                      std::lgamma(static_cast<double>(count) + 1) / std::log(2.0);
  return static_cast<prec_t>(std::ceil(lost)) + 32;
}

/// Samples of h(u) = u zeta(1+u) on u_j = r e^{2 pi i j / M}, j = 0..M/2
/// (the other half follows by conjugation). Grows by doubling, reusing the
/// samples already computed.
class CircleSamples {
public:
  CircleSamples(double radius, prec_t wp) : radius_(BigReal(radius, wp)), wp_(wp) {}

  long points() const { return points_; }
  const std::vector<BigComplex> &values() const { return values_; }

  void resize(long m) {
    if (m % 2 != 0)
      throw std::invalid_argument("sample count must be even");
    if (points_ != 0 && m != 2 * points_) {
      values_.clear();
      points_ = 0;
    }
    std::vector<BigComplex> next(static_cast<std::size_t>(m / 2 + 1));
    for (long j = 0; j <= m / 2; ++j) {
      if (points_ != 0 && j % 2 == 0)
        next[j] = std::move(values_[j / 2]);
      else
        next[j] = sample(j, m);
    }
    values_ = std::move(next);
    points_ = m;
  }

  /// c_0 .. c_count from the current samples.
  std::vector<BigReal> coefficients(long count) const {
    const long m = points_;
    const BigReal two_pi = const_pi(wp_) * 2L;
    std::vector<BigReal> cosine(static_cast<std::size_t>(m)), sine(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
      BigComplex w = expi(two_pi * BigReal(i, wp_) / BigReal(m, wp_));
      cosine[i] = w.re();
      sine[i] = w.im();
    }
    std::vector<BigReal> out;
    out.reserve(static_cast<std::size_t>(count + 1));
    BigReal r_pow(1L, wp_);
    BigReal t(wp_);
    for (long k = 0; k <= count; ++k) {
      // sum_j h_j e^{-i theta_jk}, folded with h_{M-j} = conj(h_j)
      BigReal acc = values_.front().re();
      if (k % 2 == 0)
        acc += values_.back().re();
      else
        acc -= values_.back().re();
      BigReal inner(wp_);
      for (long j = 1; j < m / 2; ++j) {
        const long idx = (j * k) % m;
        mpfr_fmma(t.raw(), values_[j].re().raw(), cosine[idx].raw(),
                  values_[j].im().raw(), sine[idx].raw(), MPFR_RNDN);
        inner += t;
      }
      acc += inner * 2L;
      out.push_back(acc / (r_pow * m));
      r_pow *= radius_;
    }
    return out;
  }

private:
  BigComplex sample(long j, long m) const {
    BigComplex u(wp_);
    if (j == 0)
      u = BigComplex(radius_);
    else if (2 * j == m)
      u = BigComplex(-radius_);
    else
      u = expi(const_pi(wp_) * BigReal(2L * j, wp_) / BigReal(m, wp_)) * radius_;
    BigComplex s = u + 1L;
    ZetaOptions zopt;
    zopt.verify = false;
    return u * zeta_em(s, wp_, zopt);
  }

  BigReal radius_;
  prec_t wp_;
  long points_ = 0;
  std::vector<BigComplex> values_;
};

inline StieltjesSet make_stieltjes_set(std::vector<BigReal> taylor, long count,
                                       const CircleOptions &opt, long points,
                                       prec_t prec) {
  StieltjesSet set;
  set.circle_radius = opt.radius;
  set.dft_points = points;
  set.prec = prec;
  mpz_class fact(1);
  for (long k = 0; k < count; ++k) {
    if (k > 0)
      fact *= k;
    BigReal g = taylor[k + 1] * BigReal(fact, taylor[k + 1].prec());
    if (k % 2 == 1)
      g = -g;
    set.values.push_back(g.with_prec(prec));
  }
  set.taylor = std::move(taylor);
  return set;
}

inline void check_normalisation(const std::vector<BigReal> &taylor, prec_t prec) {
  if (scaled_distance(taylor[0], BigReal(1L, taylor[0].prec())) >
      pow2(-static_cast<long>(prec), 64))
    throw precision_failure("stieltjes: constant coefficient of (s-1) zeta(s) "
                            "is not 1 to working precision");
}

} // namespace detail

/// Taylor coefficients c_0 .. c_count of u zeta(1+u) at a fixed number of
/// circle points, without the stability loop. Used by the convergence
/// diagnostics.
inline std::vector<BigReal> circle_taylor_fixed(long count, prec_t prec,
                                                double radius, long points) {
  require_precision(prec);
  if (count < 1)
    throw std::invalid_argument("count must be >= 1");
  CircleOptions opt;
  opt.radius = radius;
  detail::check_circle(opt);
  if (points < 2 || points % 2 != 0)
    throw std::invalid_argument("number of circle points must be even and >= 2");
  const prec_t wp = prec + detail::circle_guard_bits(count, radius);
  detail::CircleSamples samples(radius, wp);
  samples.resize(points);
  auto c = samples.coefficients(count);
  for (auto &v : c)
    v = v.with_prec(prec);
  return c;
}

/// Stieltjes constants by a discrete Fourier transform of h(u) = u zeta(1+u)
/// over M points on |u| = r. M starts at max(8 * count, dft_points) and
/// doubles until every gamma_k moves by less than 2^-(prec-16) between two
/// consecutive levels; the finer level is returned.
inline StieltjesSet stieltjes(long count, prec_t prec, const CircleOptions &opt = {}) {
  require_precision(prec);
  if (count < 1)
    throw std::invalid_argument("stieltjes: count must be >= 1");
  detail::check_circle(opt);

  const prec_t wp = prec + detail::circle_guard_bits(count, opt.radius);
  long m = std::max(opt.dft_points > 0 ? opt.dft_points : 8 * count, 2 * count + 2);
  if (m % 2 != 0)
    ++m;

  detail::CircleSamples samples(opt.radius, wp);
  samples.resize(m);
  auto coarse = samples.coefficients(count);
  auto coarse_set = detail::make_stieltjes_set(coarse, count, opt, m, prec);
  const BigReal tolerance = pow2(-static_cast<long>(prec) + 16, prec);

  while (2 * samples.points() <= opt.max_points) {
    samples.resize(2 * samples.points());
    auto fine = samples.coefficients(count);
    auto fine_set = detail::make_stieltjes_set(fine, count, opt, samples.points(), prec);
    bool stable = true;
    for (long k = 0; k < count && stable; ++k)
      stable = abs(fine_set.values[k] - coarse_set.values[k]) < tolerance;
    if (stable) {
      detail::check_normalisation(fine_set.taylor, prec);
      fine_set.taylor[0] = BigReal(1L, wp);
      return fine_set;
    }
    coarse_set = std::move(fine_set);
  }
  throw precision_failure("stieltjes: coefficients did not stabilise within " +
                          std::to_string(opt.max_points) + " circle points");
}

/// Working precision used for λ_1..λ_N: the binomial pullback needs
/// max(prec, 2N + 64) bits, plus N bits for its amplification of input
/// rounding and a 32-bit guard.
inline prec_t li_working_precision(long n_max, prec_t prec) {
  return std::max<prec_t>(prec, 2 * n_max + 64) + n_max + 32;
}

/// Default user-facing precision for coefficients up to n_max.
inline prec_t default_li_precision(long n_max) {
  return std::max<prec_t>(256, 2 * n_max + 64);
}

/// log((s-1) zeta(s)) as a series in u = s - 1 of order `count`, with zero
/// constant term.
inline TruncatedSeries tiny_u_series(long count, prec_t prec,
                                     const CircleOptions &opt = {}) {
  StieltjesSet set = stieltjes(count, prec, opt);
  std::vector<BigReal> c(set.taylor.begin(), set.taylor.begin() + count + 1);
  for (auto &v : c)
    v = v.with_prec(prec);
  return series_log(TruncatedSeries(Variable::U, std::move(c)));
}

/// Trend part T(u) = log(1+u) - (u/2) log pi + log Gamma(1/2 + u/2) - log Gamma(1/2)
/// as a series in u of order `count`. The Gamma factor is expanded in
/// w = u/2 as -(gamma + 2 log 2) w + sum_{k>=2} (-1)^k (2^k - 1) zeta(k) w^k / k.
inline TruncatedSeries trend_u_series(long count, prec_t prec) {
  require_precision(prec);
  const Constants &c = ConstantsCache::at(prec);
  const auto order = static_cast<std::size_t>(count);

  std::vector<BigReal> gamma_w(order + 1, BigReal(prec));
  if (order >= 1)
    gamma_w[1] = -(c.gamma + c.log2 * 2L);
  for (std::size_t k = 2; k <= order; ++k) {
    BigReal zk = zeta_em(BigReal(static_cast<long>(k), prec), prec);
    BigReal coeff = zk * BigReal(mpz_class((mpz_class(1) << k) - 1), prec) /
                    static_cast<long>(k);
    gamma_w[k] = k % 2 == 0 ? coeff : -coeff;
  }
  // w(u) = u / 2
  std::vector<BigReal> half(order + 1, BigReal(prec));
  if (order >= 1)
    half[1] = BigReal(0.5, prec);
  TruncatedSeries gamma_u =
      series_compose(TruncatedSeries(Variable::U, std::move(gamma_w)),
                     TruncatedSeries(Variable::U, std::move(half)));

  std::vector<BigReal> rest(order + 1, BigReal(prec));
  for (std::size_t k = 1; k <= order; ++k) {
    rest[k] = BigReal(1L, prec) / static_cast<long>(k); // log(1+u)
    if (k % 2 == 0)
      rest[k] = -rest[k];
  }
  if (order >= 1)
    rest[1] -= c.logpi / 2L;

  TruncatedSeries trend = series_add(TruncatedSeries(Variable::U, std::move(rest)), gamma_u);
  if (!trend[0].is_zero())
    throw internal_consistency_error("trend series must vanish at u = 0");
  return trend;
}

namespace detail {

/// n * [z^n] of the pullback, n = 1..N, rounded to prec.
inline std::vector<BigReal> scaled_coefficients(const TruncatedSeries &z_series,
                                                long n_max, prec_t prec) {
  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n)
    out.push_back((z_series[static_cast<std::size_t>(n)] * n).with_prec(prec));
  return out;
}

inline void require_agreement(const std::vector<BigReal> &a, const std::vector<BigReal> &b,
                              prec_t prec, const char *what) {
  const BigReal tol = pow2(-static_cast<long>(prec) + 16, prec);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (scaled_distance(a[i], b[i]) > tol)
      throw internal_consistency_error(std::string(what) + " disagree at n = " +
                                       std::to_string(i + 1) + ": " +
                                       a[i].to_string(25) + " vs " + b[i].to_string(25));
}

/// λ_tiny(1..N) from an already computed u-series, cross-checked against
/// series composition with u(z) = z/(1-z).
inline std::vector<BigReal> tiny_from_u_series(const TruncatedSeries &tiny_u,
                                               long n_max, prec_t prec) {
  const auto order = static_cast<std::size_t>(n_max);
  auto pulled = binomial_pullback(tiny_u, order);
  auto composed = series_compose(tiny_u, u_of_z(order, tiny_u.prec()));
  auto via_pullback = scaled_coefficients(pulled, n_max, prec);
  auto via_compose = scaled_coefficients(composed, n_max, prec);
  require_agreement(via_pullback, via_compose, prec, "tiny coefficient routes");
  return via_pullback;
}

} // namespace detail

/// λ_tiny(1..N): n times the coefficient of z^n in log((z/(1-z)) zeta(1/(1-z))).
/// Element i holds n = i + 1.
inline std::vector<BigReal> tiny_coefficients(long n_max, prec_t prec,
                                              const CircleOptions &opt = {}) {
  require_precision(prec);
  if (n_max < 1)
    throw std::invalid_argument("tiny_coefficients: N must be >= 1");
  const prec_t wp = li_working_precision(n_max, prec);
  return detail::tiny_from_u_series(tiny_u_series(n_max, wp, opt), n_max, prec);
}

/// λ_trend(1..N) from the Gamma/pi/s factors of xi. Element i holds n = i + 1.
inline std::vector<BigReal> trend_coefficients(long n_max, prec_t prec) {
  require_precision(prec);
  if (n_max < 1)
    throw std::invalid_argument("trend_coefficients: N must be >= 1");
  const prec_t wp = li_working_precision(n_max, prec);
  auto pulled = binomial_pullback(trend_u_series(n_max, wp), static_cast<std::size_t>(n_max));
  return detail::scaled_coefficients(pulled, n_max, prec);
}

struct LiRow {
  long n = 0;
  BigReal trend;
  BigReal tiny;
  BigReal full;
  prec_t prec = 0;
};

struct LiTable {
  std::vector<LiRow> rows;
  double circle_radius = 0;
  long dft_points = 0;
  prec_t prec = 0;
  prec_t working_prec = 0;
};

/// λ_1..λ_N with their trend/tiny split. The full value comes from one
/// pullback of the summed series and must match trend + tiny.
inline LiTable li_coefficients(long n_max, prec_t prec, const CircleOptions &opt = {}) {
  require_precision(prec);
  if (n_max < 0)
    throw std::invalid_argument("li_coefficients: N must be >= 0");
  LiTable table;
  table.circle_radius = opt.radius;
  table.prec = prec;
  if (n_max == 0)
    return table;

  const prec_t wp = li_working_precision(n_max, prec);
  table.working_prec = wp;
  const auto order = static_cast<std::size_t>(n_max);

  StieltjesSet set = stieltjes(n_max, wp, opt);
  table.dft_points = set.dft_points;
  std::vector<BigReal> c(set.taylor.begin(), set.taylor.begin() + n_max + 1);
  for (auto &v : c)
    v = v.with_prec(wp);
  TruncatedSeries tiny_u = series_log(TruncatedSeries(Variable::U, std::move(c)));
  TruncatedSeries trend_u = trend_u_series(n_max, wp);

  auto tiny = detail::tiny_from_u_series(tiny_u, n_max, prec);
  auto trend =
      detail::scaled_coefficients(binomial_pullback(trend_u, order), n_max, prec);
  auto full = detail::scaled_coefficients(
      binomial_pullback(series_add(tiny_u, trend_u), order), n_max, prec);

  std::vector<BigReal> summed;
  summed.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    summed.push_back(trend[i] + tiny[i]);
  detail::require_agreement(full, summed, prec, "full and trend + tiny");

  table.rows.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    table.rows.push_back(LiRow{static_cast<long>(i + 1), trend[i], tiny[i], full[i], prec});
  return table;
}

} // namespace likeiper

#endif // LIKEIPER_LI_HPP
