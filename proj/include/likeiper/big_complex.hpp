#ifndef LIKEIPER_BIG_COMPLEX_HPP
#define LIKEIPER_BIG_COMPLEX_HPP

#include "big_real.hpp"

#include <utility>

namespace likeiper {

/// Complex number over BigReal; both parts are kept at one precision.
///
/// All operations round to nearest with sign-symmetric formulas, so that
/// f(conj(z)) == conj(f(z)) holds bit for bit for the functions below.
class BigComplex {
public:
  BigComplex() : BigComplex(min_precision) {}
  explicit BigComplex(prec_t prec) : re_(prec), im_(prec) {}

  BigComplex(const BigReal &re, const BigReal &im)
      : re_(re), im_(im) {
    const prec_t p = std::max(re.prec(), im.prec());
    if (re_.prec() != p)
      re_ = re_.with_prec(p);
    if (im_.prec() != p)
      im_ = im_.with_prec(p);
  }

  explicit BigComplex(const BigReal &re) : BigComplex(re, BigReal(re.prec())) {}

  BigComplex(double re, double im, prec_t prec)
      : re_(re, prec), im_(im, prec) {}

  const BigReal &re() const { return re_; }
  const BigReal &im() const { return im_; }
  prec_t prec() const { return re_.prec(); }

  BigComplex with_prec(prec_t prec) const {
    return {re_.with_prec(prec), im_.with_prec(prec)};
  }

  BigComplex conj() const { return {re_, -im_}; }
  BigReal norm() const { return sqr(re_) + sqr(im_); }
  BigReal abs() const {
    BigReal r(prec());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
  }

  BigComplex operator-() const { return {-re_, -im_}; }

  BigComplex &operator+=(const BigComplex &b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
  }
  BigComplex &operator-=(const BigComplex &b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
  }
  BigComplex &operator*=(const BigComplex &b) { return *this = *this * b; }
  BigComplex &operator/=(const BigComplex &b) { return *this = *this / b; }
  BigComplex &operator*=(const BigReal &b) {
    re_ *= b;
    im_ *= b;
    return *this;
  }
  BigComplex &operator/=(const BigReal &b) {
    re_ /= b;
    im_ /= b;
    return *this;
  }

  friend BigComplex operator+(BigComplex a, const BigComplex &b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex &b) { return a -= b; }
  friend BigComplex operator+(BigComplex a, const BigReal &b) {
    a.re_ += b;
    return a;
  }
  friend BigComplex operator-(BigComplex a, const BigReal &b) {
    a.re_ -= b;
    return a;
  }
  friend BigComplex operator+(BigComplex a, long b) {
    a.re_ += b;
    return a;
  }
  friend BigComplex operator-(BigComplex a, long b) {
    a.re_ -= b;
    return a;
  }
  friend BigComplex operator*(BigComplex a, const BigReal &b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal &b) { return a /= b; }

  friend BigComplex operator*(const BigComplex &a, const BigComplex &b) {
    const prec_t p = std::max(a.prec(), b.prec());
    BigComplex r(p);
    mpfr_fmms(r.re_.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(),
              MPFR_RNDN);
    mpfr_fmma(r.im_.raw(), a.re_.raw(), b.im_.raw(), a.im_.raw(), b.re_.raw(),
              MPFR_RNDN);
    return r;
  }

  friend BigComplex operator/(const BigComplex &a, const BigComplex &b) {
    const prec_t p = std::max(a.prec(), b.prec());
    BigReal den = b.norm().with_prec(p + 16);
    BigComplex r(p);
    BigReal t(p + 16);
    mpfr_fmma(t.raw(), a.re_.raw(), b.re_.raw(), a.im_.raw(), b.im_.raw(),
              MPFR_RNDN);
    mpfr_div(r.re_.raw(), t.raw(), den.raw(), MPFR_RNDN);
    mpfr_fmms(t.raw(), a.im_.raw(), b.re_.raw(), a.re_.raw(), b.im_.raw(),
              MPFR_RNDN);
    mpfr_div(r.im_.raw(), t.raw(), den.raw(), MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigComplex &a, const BigComplex &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  BigReal &re_ref() { return re_; }
  BigReal &im_ref() { return im_; }

private:
  BigReal re_;
  BigReal im_;
};

/// e^{i*theta}.
inline BigComplex expi(const BigReal &theta) {
  BigReal c(theta.prec()), s(theta.prec());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {c, s};
}

inline BigComplex exp(const BigComplex &z) {
  return expi(z.im()) * exp(z.re());
}

/// Principal branch.
inline BigComplex log(const BigComplex &z) {
  BigReal arg(z.prec());
  mpfr_atan2(arg.raw(), z.im().raw(), z.re().raw(), MPFR_RNDN);
  return {log(z.abs()), arg};
}

/// base^{-s} for a positive real base, given log(base).
inline BigComplex pow_neg(const BigReal &log_base, const BigComplex &s) {
  BigReal mag = exp(-(s.re() * log_base));
  return expi(-(s.im() * log_base)) * mag;
}

inline BigComplex pow(const BigComplex &z, unsigned long n) {
  BigComplex result(BigReal(1L, z.prec()));
  BigComplex base = z;
  while (n > 0) {
    if (n & 1UL)
      result *= base;
    n >>= 1;
    if (n > 0)
      base *= base;
  }
  return result;
}

} // namespace likeiper

#endif // LIKEIPER_BIG_COMPLEX_HPP
