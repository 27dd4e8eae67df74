#ifndef LIKEIPER_ZEROS_HPP
#define LIKEIPER_ZEROS_HPP

#include "big_complex.hpp"
#include "big_real.hpp"
#include "constants.hpp"
#include "errors.hpp"

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Positive ordinates t of nontrivial zeta zeros 1/2 + i t, ascending.
struct ZeroTable {
  std::vector<BigReal> ordinates;
  std::string source_path;

  std::size_t count() const { return ordinates.size(); }

  ZeroTable prefix(std::size_t k) const {
    ZeroTable t;
    t.source_path = source_path;
    t.ordinates.assign(ordinates.begin(),
                       ordinates.begin() + static_cast<std::ptrdiff_t>(std::min(k, count())));
    return t;
  }
};

/// Parses zero ordinates from a stream: one decimal per line, blank lines
/// and lines starting with '#' skipped. Stops after `limit` values.
inline ZeroTable parse_zeros(std::istream &in, prec_t prec,
                             std::optional<std::size_t> limit = std::nullopt,
                             std::string source = "<stream>") {
  ZeroTable table;
  table.source_path = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  while ((!limit || table.count() < *limit) && std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string field = line.substr(first, last - first + 1);
    BigReal t(prec);
    try {
      t = BigReal::from_string(field, prec);
    } catch (const std::invalid_argument &) {
      throw parse_error("zeros file: '" + field + "' is not a decimal number", line_no);
    }
    if (!table.ordinates.empty() && !(t > table.ordinates.back()))
      throw validation_error("zeros file: ordinates not strictly increasing at line " +
                             std::to_string(line_no));
    table.ordinates.push_back(std::move(t));
  }
  if (!table.ordinates.empty() &&
      !(table.ordinates.front() > 14L && table.ordinates.front() < 15L))
    throw validation_error("zeros file: first ordinate " +
                           table.ordinates.front().to_string(12) +
                           " is not the first zero (expected in (14, 15))");
  return table;
}

inline ZeroTable load_zeros(const std::string &path, prec_t prec = 128,
                            std::optional<std::size_t> limit = std::nullopt) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open zeros file: " + path);
  return parse_zeros(in, prec, limit, path);
}

struct ZeroSumEstimate {
  BigReal estimate;
  BigReal tail_bound;
  /// Sum of the imaginary parts of the pair contributions; zero up to
  /// rounding because each pair is summed with its conjugate.
  BigReal imaginary_residue;
};

/// λ_n = sum_rho [1 - (1 - 1/rho)^n] truncated to the zeros in `zeros`
/// (each ordinate t standing for the pair 1/2 +- i t).
///
/// The reported tail is a heuristic, not added to the estimate: n times the
/// integral of the zero density log(t/2pi)/(2pi) against 1/(1/4 + t^2)
/// beyond the largest ordinate T, evaluated with 1/t^2 in place of the
/// kernel, which gives n (log(T/2pi) + 1) / (2 pi T).
inline ZeroSumEstimate lambda_from_zeros(long n, const ZeroTable &zeros, prec_t prec) {
  require_precision(prec);
  if (n < 0)
    throw std::invalid_argument("lambda_from_zeros: n must be >= 0");
  ZeroSumEstimate out{BigReal(prec), BigReal(prec), BigReal(prec)};
  if (n == 0)
    return out;
  if (zeros.count() == 0)
    throw std::invalid_argument("lambda_from_zeros: zero table is empty");

  const prec_t wp = prec + 32;
  const BigReal half(0.5, wp);
  const BigComplex one(BigReal(1L, wp));
  BigReal re_sum(wp), im_sum(wp);
  for (const auto &t : zeros.ordinates) {
    BigComplex rho(half, t.with_prec(wp));
    BigComplex w = pow(one - one / rho, static_cast<unsigned long>(n));
    BigComplex w_conj = pow(one - one / rho.conj(), static_cast<unsigned long>(n));
    BigComplex pair = (one - w) + (one - w_conj);
    re_sum += pair.re();
    im_sum += pair.im();
  }

  const BigReal T = zeros.ordinates.back().with_prec(wp);
  const BigReal two_pi = const_pi(wp) * 2L;
  BigReal tail = (log(T / two_pi) + 1L) / (two_pi * T) * n;

  out.estimate = re_sum.with_prec(prec);
  out.tail_bound = tail.with_prec(prec);
  out.imaginary_residue = im_sum.with_prec(prec);
  return out;
}

} // namespace likeiper

#endif // LIKEIPER_ZEROS_HPP
