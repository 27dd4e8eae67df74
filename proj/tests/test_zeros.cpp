#include "oracles.hpp"

#include <likeiper/errors.hpp>
#include <likeiper/li.hpp>
#include <likeiper/zeros.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace likeiper;

namespace {

ZeroTable parse(const std::string &text, std::optional<std::size_t> limit = std::nullopt) {
  std::istringstream in(text);
  return parse_zeros(in, 128, limit);
}

const std::string sample_path = std::string(LIKEIPER_DATA_DIR) + "/zeros_first100.txt";

} // namespace

TEST(ZerosParse, Basic) {
  auto t = parse("14.134725142\n21.022039639\n25.010857580\n");
  EXPECT_EQ(t.count(), 3u);
  EXPECT_EQ(t.ordinates[1], BigReal::from_string("21.022039639", 128));
}

TEST(ZerosParse, EmptyAndComments) {
  EXPECT_EQ(parse("").count(), 0u);
  EXPECT_EQ(parse("# header\n14.134725142\n").count(), 1u);
  EXPECT_EQ(parse("\n  # indented comment\n\n14.134725142  \r\n").count(), 1u);
}

TEST(ZerosParse, Limit) {
  EXPECT_EQ(parse("14.134725142\n21.022039639\n25.010857580\n", 2).count(), 2u);
}

TEST(ZerosParse, ReportsLineNumber) {
  try {
    parse("# header\n14.134725142\nabc\n");
    FAIL() << "expected parse_error";
  } catch (const parse_error &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ZerosParse, RejectsUnsortedAndWrongStart) {
  EXPECT_THROW(parse("14.134725142\n25.0\n21.0\n"), validation_error);
  EXPECT_THROW(parse("14.134725142\n14.134725142\n"), validation_error);
  EXPECT_THROW(parse("21.022039639\n"), validation_error);
}

TEST(ZerosParse, MissingFile) {
  EXPECT_THROW(load_zeros("/nonexistent/zeros.txt"), std::runtime_error);
}

TEST(ZerosParse, ShippedSample) {
  ZeroTable t = load_zeros(sample_path);
  EXPECT_EQ(t.count(), 100u);
  EXPECT_EQ(t.source_path, sample_path);
  EXPECT_NEAR(t.ordinates.back().to_double(), 236.524229666, 1e-9);
}

TEST(ZeroSum, Degenerate) {
  ZeroTable empty;
  auto e = lambda_from_zeros(0, empty, 128);
  EXPECT_TRUE(e.estimate.is_zero());
  EXPECT_TRUE(e.tail_bound.is_zero());
  EXPECT_THROW(lambda_from_zeros(1, empty, 128), std::invalid_argument);
  EXPECT_THROW(lambda_from_zeros(-1, parse("14.134725142\n"), 128), std::invalid_argument);
}

TEST(ZeroSum, SinglePair) {
  const prec_t p = 128;
  auto t = parse("14.134725142\n");
  auto e = lambda_from_zeros(1, t, p);
  const BigReal y = BigReal::from_string("14.134725142", p);
  // 2 Re(1/rho) = 1 / (1/4 + t^2)
  const BigReal expected = BigReal(1L, p) / (sqr(y) + BigReal(0.25, p));
  EXPECT_LT(abs(e.estimate - expected), pow2(-(p - 8), p));
  EXPECT_NEAR(e.estimate.to_double(), 0.0049989888, 1e-10);
  EXPECT_TRUE(abs(e.imaginary_residue) < pow2(-(p - 8), p));
}

TEST(ZeroSum, MonotoneRefinementOnSample) {
  const prec_t p = 192;
  ZeroTable all = load_zeros(sample_path, p);
  LiTable li = li_coefficients(10, 256);
  for (long n : {1L, 2L, 5L, 10L}) {
    const BigReal target = li.rows[static_cast<std::size_t>(n - 1)].full.with_prec(p);
    BigReal previous_gap(p);
    for (std::size_t k = 10; k <= all.count(); k += 10) {
      auto e = lambda_from_zeros(n, all.prefix(k), p);
      BigReal gap = abs(target - e.estimate);
      EXPECT_LT(e.estimate, target) << "n = " << n << ", " << k << " zeros";
      if (k > 10)
        EXPECT_LE(gap, previous_gap) << "n = " << n << ", " << k << " zeros";
      EXPECT_LT(abs(e.imaginary_residue), pow2(-(p - 16), p));
      previous_gap = gap;
    }
  }
}

TEST(ZeroSum, TailBoundWithLargeFile) {
  const char *path = std::getenv("LIKEIPER_ZEROS_FILE");
  if (path == nullptr)
    GTEST_SKIP() << "set LIKEIPER_ZEROS_FILE to a file with at least 1e5 zero ordinates";
  ZeroTable t = load_zeros(path, 128);
  if (t.count() < 100000)
    GTEST_SKIP() << "only " << t.count() << " ordinates in " << path;
  LiTable li = li_coefficients(10, 256);
  for (long n = 1; n <= 10; ++n) {
    auto e = lambda_from_zeros(n, t, 128);
    const BigReal diff = abs(e.estimate - li.rows[static_cast<std::size_t>(n - 1)].full);
    EXPECT_LE(diff, e.tail_bound * 3L) << "n = " << n;
  }
}
