#ifndef LIKEIPER_TEST_ORACLES_HPP
#define LIKEIPER_TEST_ORACLES_HPP

// Independent reference computations for the tests. None of these share an
// algorithm with the library code they check.

#include <likeiper/big_complex.hpp>
#include <likeiper/big_real.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <vector>

namespace likeiper {
inline void PrintTo(const BigReal &x, std::ostream *os) { *os << x.to_string(25); }
} // namespace likeiper

namespace oracle {

using likeiper::BigComplex;
using likeiper::BigReal;
using likeiper::prec_t;

inline BigReal mpfr_const(int (*f)(mpfr_ptr, mpfr_rnd_t), prec_t prec) {
  BigReal r(prec);
  f(r.raw(), MPFR_RNDN);
  return r;
}
inline BigReal gamma(prec_t prec) { return mpfr_const(mpfr_const_euler, prec); }
inline BigReal pi(prec_t prec) { return mpfr_const(mpfr_const_pi, prec); }

/// Real zeta from MPFR.
inline BigReal zeta(const BigReal &s) {
  BigReal r(s.prec());
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

/// log Gamma from MPFR (x > 0).
inline BigReal lngamma(const BigReal &x) {
  BigReal r(x.prec());
  mpfr_lngamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

/// B_0 .. B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0.
inline std::vector<mpq_class> bernoulli_recurrence(unsigned long n) {
  std::vector<mpq_class> b(n + 1);
  b[0] = 1;
  for (unsigned long m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (unsigned long k = 0; k < m; ++k) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
      acc += mpq_class(c) * b[k];
    }
    b[m] = -acc / mpq_class(m + 1);
    b[m].canonicalize();
  }
  return b;
}

/// H_m - log m - 1/(2m) + 1/(12 m^2); equals gamma up to about 1/(120 m^4).
inline BigReal harmonic_gamma(long m, prec_t prec) {
  BigReal h(prec);
  for (long k = m; k >= 1; --k)
    h += BigReal(1L, prec) / k;
  BigReal mm(m, prec);
  return h - log(mm) - BigReal(1L, prec) / (mm * 2L) + BigReal(1L, prec) / (sqr(mm) * 12L);
}

/// zeta(s) via Borwein's alternating-series acceleration of the Dirichlet eta
/// function, zeta(s) = eta(s) / (1 - 2^(1-s)). Valid for Re s > 0, s != 1.
inline BigComplex zeta_eta(const BigComplex &s, prec_t prec) {
  const prec_t wp = prec + 32;
  const BigComplex sw = s.with_prec(wp);
  const double t = std::fabs(sw.im().to_double());
  // error ~ (3 + sqrt 8)^-n (1 + 2|t|) e^{pi |t| / 2}
  const long n = static_cast<long>((wp + 8 + (t * 2.27 + std::log2(1 + 2 * t))) / 2.54) + 2;

  std::vector<mpz_class> d(static_cast<std::size_t>(n + 1));
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  mpz_class sum = 0;
  for (long i = 0; i <= n; ++i) {
    mpz_class a, b, c;
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(n + i - 1));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_fac_ui(c.get_mpz_t(), static_cast<unsigned long>(2 * i));
    mpz_class four = mpz_class(1) << (2 * i);
    sum += n * a * four / (b * c);
    d[static_cast<std::size_t>(i)] = sum;
  }
  const BigReal dn(d[static_cast<std::size_t>(n)], wp);
  BigComplex acc(wp);
  for (long k = 0; k < n; ++k) {
    BigReal coeff(mpz_class(d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]), wp);
    if (k % 2 == 1)
      coeff = -coeff;
    // (k+1)^-s = exp(-s log(k+1))
    BigComplex p = exp(-(sw * log(BigReal(k + 1, wp))));
    acc += p * coeff;
  }
  BigComplex eta = -(acc / dn);
  // 1 - 2^(1-s)
  BigComplex one_minus_s = BigComplex(BigReal(1L, wp)) - sw;
  BigComplex denom = BigComplex(BigReal(1L, wp)) - exp(one_minus_s * log(BigReal(2L, wp)));
  return (eta / denom).with_prec(prec);
}

/// λ_tiny(1..N) from a DFT of log((z/(1-z)) zeta(1/(1-z))) on |z| = rho,
/// with zeta from zeta_eta. Works directly in z: no Stieltjes constants and
/// no change of variable.
inline std::vector<BigReal> tiny_by_z_circle(long n_max, prec_t prec, long points = 256,
                                             double rho = 0.5) {
  const prec_t wp = prec + static_cast<prec_t>(n_max * std::log2(1 / rho)) + 32;
  const BigReal r(rho, wp);
  const BigReal two_pi = pi(wp) * 2L;
  const BigComplex one(BigReal(1L, wp));
  std::vector<BigComplex> f(static_cast<std::size_t>(points));
  for (long j = 0; j <= points / 2; ++j) {
    BigComplex z = expi(two_pi * BigReal(j, wp) / BigReal(points, wp)) * r;
    BigComplex u = z / (one - z);
    BigComplex value = log(u * zeta_eta(u + one, wp));
    if (j > 0 && j < points / 2)
      f[static_cast<std::size_t>(points - j)] = value.conj();
    f[static_cast<std::size_t>(j)] = std::move(value);
  }
  std::vector<BigReal> out;
  BigReal r_pow(1L, wp);
  for (long n = 1; n <= n_max; ++n) {
    r_pow *= r;
    BigReal acc(wp);
    for (long j = 0; j < points; ++j) {
      BigComplex w = expi(-(two_pi * BigReal((j * n) % points, wp) / BigReal(points, wp)));
      acc += (f[static_cast<std::size_t>(j)] * w).re();
    }
    out.push_back((acc / (r_pow * points) * n).with_prec(prec));
  }
  return out;
}

/// log xi(s) for real s > 0, s != 1, from MPFR zeta and log Gamma.
inline BigReal log_xi(const BigReal &s) {
  const prec_t p = s.prec();
  // s (s-1) zeta(s) > 0 on both sides of the pole
  return log(s * (s - 1L) * zeta(s) / 2L) - s * log(pi(p)) / 2L + lngamma(s / 2L);
}

/// gamma_1 from the second central difference of u zeta(1+u) at u = 0
/// (whose u^2 coefficient is -gamma_1).
inline BigReal gamma1_finite_difference(prec_t prec, long step_log2 = -20) {
  const BigReal h = likeiper::pow2(step_log2, prec);
  auto hz = [&](const BigReal &u) { return u * zeta(u + 1L); };
  BigReal second = (hz(h) - 2L + hz(-h)) / sqr(h);
  return -(second / 2L);
}

} // namespace oracle

#endif // LIKEIPER_TEST_ORACLES_HPP
