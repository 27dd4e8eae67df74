#ifndef LIKEIPER_FORMAT_HPP
#define LIKEIPER_FORMAT_HPP

#include "big_real.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace likeiper {

/// Fixed-point decimal with `digits` fractional digits, rounded half to
/// even at the last digit. Exact: the scaling by 10^digits is carried out
/// without rounding before the final integer rounding.
inline std::string format_fixed(const BigReal &x, int digits) {
  if (digits < 0)
    throw std::invalid_argument("format_fixed: digits must be >= 0");
  if (!x.is_finite())
    throw std::invalid_argument("format_fixed: value is not finite");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const prec_t p = x.prec() + static_cast<prec_t>(mpz_sizeinbase(scale.get_mpz_t(), 2)) + 2;
  BigReal scaled(p);
  mpfr_mul_z(scaled.raw(), x.raw(), scale.get_mpz_t(), MPFR_RNDN); // exact at p bits
  mpfr_rint(scaled.raw(), scaled.raw(), MPFR_RNDN);                // ties to even
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), scaled.raw(), MPFR_RNDN);

  const bool negative = n < 0;
  std::string s = mpz_class(abs(n)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

/// Output record: ordered (column, value) pairs, with every value already
/// rendered as a string. CSV and JSON emitters share this representation.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record &add(std::string column, std::string value) {
    fields.emplace_back(std::move(column), std::move(value));
    return *this;
  }
};

enum class OutputFormat { Csv, Json };

inline std::string csv_escape(const std::string &v) {
  if (v.find_first_of(",\"\n") == std::string::npos)
    return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

/// Writes records as CSV under the given header row, or as a JSON array of
/// objects whose members mirror the CSV columns. Values stay decimal
/// strings so that no digits are lost to binary floating point.
inline void write_records(std::ostream &out, const std::vector<Record> &records,
                          OutputFormat format, const std::vector<std::string> &header) {
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "," : "") << csv_escape(header[i]);
    out << '\n';
    for (const auto &r : records) {
      for (std::size_t i = 0; i < r.fields.size(); ++i)
        out << (i ? "," : "") << csv_escape(r.fields[i].second);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto &r : records) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto &[column, value] : r.fields)
      obj[column] = value;
    array.push_back(std::move(obj));
  }
  out << array.dump(1) << '\n';
}

} // namespace likeiper

#endif // LIKEIPER_FORMAT_HPP
