#ifndef LIKEIPER_BIG_REAL_HPP
#define LIKEIPER_BIG_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace likeiper {

using prec_t = mpfr_prec_t;

/// Smallest working precision accepted by the public entry points.
inline constexpr prec_t min_precision = 64;

inline void require_precision(prec_t prec) {
  if (prec < min_precision)
    throw std::invalid_argument("precision must be at least " +
                                std::to_string(min_precision) + " bits, got " +
                                std::to_string(prec));
}

/// Arbitrary-precision real backed by an MPFR value.
///
/// Every value carries its own precision. Binary arithmetic produces a
/// result at the larger of the two operand precisions, rounded to nearest.
/// Mixed operations with machine integers keep the precision of the BigReal.
class BigReal {
public:
  BigReal() : BigReal(min_precision) {}

  explicit BigReal(prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  BigReal(long value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  BigReal(int value, prec_t prec) : BigReal(static_cast<long>(value), prec) {}

  BigReal(double value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  BigReal(const mpz_class &value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  BigReal(const mpq_class &value, prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  /// Parses a decimal literal ("0.04610606601", "-1e-3"); the conversion is
  /// correctly rounded to `prec` bits.
  static BigReal from_string(std::string_view text, prec_t prec) {
    BigReal r(prec);
    std::string buf(text);
    char *end = nullptr;
    mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
    if (buf.empty() || end != buf.c_str() + buf.size())
      throw std::invalid_argument("not a decimal number: '" + buf + "'");
    return r;
  }

  BigReal(const BigReal &other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  BigReal(BigReal &&other) noexcept {
    // Steal the limbs; the moved-from object is left uninitialised and only
    // supports destruction or assignment.
    v_->_mpfr_prec = MPFR_PREC_MIN;
    v_->_mpfr_sign = 1;
    v_->_mpfr_exp = 0;
    v_->_mpfr_d = nullptr;
    mpfr_swap(v_, other.v_);
  }

  BigReal &operator=(const BigReal &other) {
    if (this != &other) {
      if (!initialized())
        mpfr_init2(v_, mpfr_get_prec(other.v_));
      else
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigReal &operator=(BigReal &&other) noexcept {
    if (this != &other)
      mpfr_swap(v_, other.v_);
    return *this;
  }

  ~BigReal() {
    if (initialized())
      mpfr_clear(v_);
  }

  prec_t prec() const { return mpfr_get_prec(v_); }

  /// Copy of this value rounded to another precision.
  BigReal with_prec(prec_t prec) const {
    BigReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const {
    if (is_zero())
      return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v_);
  }

  /// Scientific notation with `digits` significant digits (debugging aid;
  /// fixed-point emission lives in format.hpp).
  std::string to_string(int digits = 20) const {
    char *s = nullptr;
    mpfr_asprintf(&s, "%.*Re", std::max(digits - 1, 0), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  BigReal operator-() const {
    BigReal r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigReal &operator+=(const BigReal &b) { return assign_op(b, mpfr_add); }
  BigReal &operator-=(const BigReal &b) { return assign_op(b, mpfr_sub); }
  BigReal &operator*=(const BigReal &b) { return assign_op(b, mpfr_mul); }
  BigReal &operator/=(const BigReal &b) { return assign_op(b, mpfr_div); }

  BigReal &operator+=(long b) {
    mpfr_add_si(v_, v_, b, MPFR_RNDN);
    return *this;
  }
  BigReal &operator-=(long b) {
    mpfr_sub_si(v_, v_, b, MPFR_RNDN);
    return *this;
  }
  BigReal &operator*=(long b) {
    mpfr_mul_si(v_, v_, b, MPFR_RNDN);
    return *this;
  }
  BigReal &operator/=(long b) {
    mpfr_div_si(v_, v_, b, MPFR_RNDN);
    return *this;
  }

  friend BigReal operator+(const BigReal &a, const BigReal &b) {
    return binary(a, b, mpfr_add);
  }
  friend BigReal operator-(const BigReal &a, const BigReal &b) {
    return binary(a, b, mpfr_sub);
  }
  friend BigReal operator*(const BigReal &a, const BigReal &b) {
    return binary(a, b, mpfr_mul);
  }
  friend BigReal operator/(const BigReal &a, const BigReal &b) {
    return binary(a, b, mpfr_div);
  }

  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator-(long a, const BigReal &b) {
    BigReal r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(long a, const BigReal &b) {
    BigReal r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal &a, const BigReal &b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal &a, const BigReal &b) {
    if (mpfr_unordered_p(a.v_, b.v_))
      return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater
                         : std::partial_ordering::equivalent;
  }
  friend bool operator==(const BigReal &a, long b) {
    return mpfr_cmp_si(a.v_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const BigReal &a, long b) {
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater
                         : std::partial_ordering::equivalent;
  }

private:
  using mpfr_binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  bool initialized() const { return v_->_mpfr_d != nullptr; }

  BigReal &assign_op(const BigReal &b, mpfr_binary op) {
    if (b.prec() > prec())
      mpfr_prec_round(v_, b.prec(), MPFR_RNDN);
    op(v_, v_, b.v_, MPFR_RNDN);
    return *this;
  }

  static BigReal binary(const BigReal &a, const BigReal &b, mpfr_binary op) {
    BigReal r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

namespace detail {
using mpfr_unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

inline BigReal apply(const BigReal &x, mpfr_unary op) {
  BigReal r(x.prec());
  op(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
} // namespace detail

inline BigReal abs(const BigReal &x) { return detail::apply(x, mpfr_abs); }
inline BigReal sqrt(const BigReal &x) { return detail::apply(x, mpfr_sqrt); }
inline BigReal log(const BigReal &x) { return detail::apply(x, mpfr_log); }
inline BigReal log2(const BigReal &x) { return detail::apply(x, mpfr_log2); }
inline BigReal log1p(const BigReal &x) { return detail::apply(x, mpfr_log1p); }
inline BigReal exp(const BigReal &x) { return detail::apply(x, mpfr_exp); }
inline BigReal sin(const BigReal &x) { return detail::apply(x, mpfr_sin); }
inline BigReal cos(const BigReal &x) { return detail::apply(x, mpfr_cos); }
inline BigReal sqr(const BigReal &x) { return detail::apply(x, mpfr_sqr); }

inline BigReal pow(const BigReal &x, const BigReal &y) {
  BigReal r(std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

inline BigReal pow(const BigReal &x, long n) {
  BigReal r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

/// x * 2^e, exact.
inline BigReal ldexp(const BigReal &x, long e) {
  BigReal r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

/// 2^e as a BigReal of the given precision.
inline BigReal pow2(long e, prec_t prec) { return ldexp(BigReal(1L, prec), e); }

inline BigReal max(const BigReal &a, const BigReal &b) { return a < b ? b : a; }

/// |a - b| / max(1, |b|): the comparison measure used throughout the tests
/// and the internal cross-checks.
inline BigReal scaled_distance(const BigReal &a, const BigReal &b) {
  BigReal d = abs(a - b);
  BigReal m = abs(b);
  return m > 1L ? d / m : d;
}

} // namespace likeiper

#endif // LIKEIPER_BIG_REAL_HPP
