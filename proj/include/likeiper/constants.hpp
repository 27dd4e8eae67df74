#ifndef LIKEIPER_CONSTANTS_HPP
#define LIKEIPER_CONSTANTS_HPP

#include "big_real.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Mathematical constants at one working precision.
struct Constants {
  prec_t prec;
  BigReal gamma;  // Euler-Mascheroni
  BigReal pi;
  BigReal log2;
  BigReal logpi;
  BigReal log2pi;
};

namespace detail {

inline Constants compute_constants(prec_t prec) {
  // Evaluate with guard bits and round once, so the result is the same
  // whichever thread builds it.
  const prec_t wp = prec + 32;
  BigReal gamma(wp), pi(wp), log2(wp);
  mpfr_const_euler(gamma.raw(), MPFR_RNDN);
  mpfr_const_pi(pi.raw(), MPFR_RNDN);
  mpfr_const_log2(log2.raw(), MPFR_RNDN);
  BigReal logpi = likeiper::log(pi);
  BigReal log2pi = logpi + log2;
  return Constants{prec,
                   gamma.with_prec(prec),
                   pi.with_prec(prec),
                   log2.with_prec(prec),
                   logpi.with_prec(prec),
                   log2pi.with_prec(prec)};
}

} // namespace detail

/// Process-wide cache of constants keyed by precision. Initialisation of a
/// precision level happens once; concurrent callers observe the same object.
class ConstantsCache {
public:
  static const Constants &at(prec_t prec) {
    require_precision(prec);
    static std::mutex mutex;
    static std::map<prec_t, std::unique_ptr<Constants>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[prec];
    if (!slot)
      slot = std::make_unique<Constants>(detail::compute_constants(prec));
    return *slot;
  }
};

/// Euler-Mascheroni constant.
inline BigReal euler_gamma(prec_t prec) { return ConstantsCache::at(prec).gamma; }
inline BigReal const_pi(prec_t prec) { return ConstantsCache::at(prec).pi; }
inline BigReal const_log2(prec_t prec) { return ConstantsCache::at(prec).log2; }
inline BigReal const_log_pi(prec_t prec) { return ConstantsCache::at(prec).logpi; }
inline BigReal const_log_2pi(prec_t prec) { return ConstantsCache::at(prec).log2pi; }

/// Exact Bernoulli number B_index for even index >= 2.
///
/// Generated from the tangent numbers T_k (integer-only recurrence),
///   B_{2k} = (-1)^{k-1} 2k T_k / (2^{2k} (2^{2k} - 1)),
/// and cached; the table is regrown to twice the requested size on a miss.
inline mpq_class bernoulli(long index) {
  if (index < 2 || index % 2 != 0)
    throw std::invalid_argument("bernoulli: index must be even and >= 2, got " +
                                std::to_string(index));
  static std::mutex mutex;
  static std::vector<mpq_class> table; // table[k-1] = B_{2k}
  std::lock_guard lock(mutex);
  const std::size_t k_wanted = static_cast<std::size_t>(index / 2);
  if (table.size() < k_wanted) {
    const std::size_t n = std::max<std::size_t>(2 * k_wanted, 64);
    std::vector<mpz_class> t(n + 1);
    t[1] = 1;
    for (std::size_t k = 2; k <= n; ++k)
      t[k] = (k - 1) * t[k - 1];
    for (std::size_t k = 2; k <= n; ++k)
      for (std::size_t j = k; j <= n; ++j)
        t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    std::vector<mpq_class> fresh;
    fresh.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
      mpz_class four_k = mpz_class(1) << (2 * k);
      mpq_class b(mpz_class(2 * k) * t[k], four_k * (four_k - 1));
      b.canonicalize();
      fresh.push_back(k % 2 == 1 ? b : mpq_class(-b));
    }
    table = std::move(fresh);
  }
  return table[k_wanted - 1];
}

} // namespace likeiper

#endif // LIKEIPER_CONSTANTS_HPP
