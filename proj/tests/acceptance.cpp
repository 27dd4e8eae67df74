// Acceptance checks. Prints one PASS/FAIL line per criterion followed by
// indented detail lines. Run with `--criterion K` (repeatable) to select.

#include <likeiper/likeiper.hpp>

#include <gmpxx.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace likeiper;

namespace {

struct Report {
  std::vector<std::string> details;
  void add(const std::string &s) { details.push_back(s); }
};

BigReal dec(std::string_view s, prec_t p) { return BigReal::from_string(s, p); }

std::string sci(const BigReal &x) { return x.to_string(4); }

/// Value at `digits` decimals as an integer count of units in the last place.
mpz_class scaled_units(std::string_view decimal, int digits) {
  std::string s(decimal);
  bool neg = !s.empty() && s[0] == '-';
  if (neg)
    s.erase(0, 1);
  auto dot = s.find('.');
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
  frac.resize(static_cast<std::size_t>(digits), '0');
  mpz_class v(whole + frac, 10);
  return neg ? mpz_class(-v) : v;
}

const LiTable &table31_512() {
  static const LiTable t = li_coefficients(31, 512);
  return t;
}

bool criterion1(Report &r) {
  auto start = std::chrono::steady_clock::now();
  const LiTable &t = table31_512();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = true;
  int checked = 0;
  for (const auto &row : reference_dataset()) {
    if (row.source != DataSource::Table)
      continue;
    ++checked;
    const BigReal &tiny = t.rows[static_cast<std::size_t>(row.n - 1)].tiny;
    const std::string ours = format_fixed(tiny, 6);
    mpz_class diff = scaled_units(ours, 6) - scaled_units(row.tiny, 6);
    if (abs(diff) > 1) {
      ok = false;
      r.add("n = " + std::to_string(row.n) + ": computed " + format_fixed(tiny, 9) +
            ", table " + std::string(row.tiny) + " (off by " + diff.get_str() +
            " in the 6th decimal)");
    }
  }
  r.add(std::to_string(checked) + " table rows checked at 512 bits in " +
        std::to_string(seconds).substr(0, 5) + " s (limit 60 s)");
  if (seconds >= 60) {
    ok = false;
    r.add("runtime target missed");
  }
  return ok;
}

bool criterion2(Report &r) {
  const LiTable &t = table31_512();
  const prec_t p = 512;
  const BigReal tol = dec("1e-9", p);
  BigReal t5 = t.rows[4].tiny;
  BigReal t6 = t.rows[5].tiny / 6L;
  BigReal d5 = abs(t5 - dec("1.45826850020", p));
  BigReal d6 = abs(t6 - dec("0.2480497212", p));
  r.add("lambda_tiny(5) = " + format_fixed(t5, 14) + " (target 1.45826850020, diff " + sci(d5) + ")");
  r.add("lambda_tiny(6)/6 = " + format_fixed(t6, 14) + " (target 0.2480497212, diff " + sci(d6) + ")");
  return d5 <= tol && d6 <= tol;
}

bool criterion3(Report &r) {
  const prec_t p = default_li_precision(15);
  BigReal s = identity_sum(BigReal(0.5, p), 15, p);
  BigReal d = abs(s - dec("0.04610606601", p));
  r.add("sum_{n<=15} lambda_n 2^-n / n = " + format_fixed(s, 16));
  r.add("target 0.04610606601, diff " + sci(d) + ", tolerance 1e-9");
  return d <= dec("1e-9", p);
}

bool criterion4(Report &r) {
  const prec_t p = default_li_precision(60);
  BigReal s = identity_sum(BigReal(0.5, p), 60, p);
  BigReal target = log(const_pi(p) / 3L);
  BigReal d = abs(s - target);
  r.add("sum_{n<=60} = " + format_fixed(s, 20) + ", log(pi/3) = " + format_fixed(target, 20));
  r.add("|difference| = " + sci(d) + ", tolerance 1e-12");
  const std::string printed = "0.04611759699";
  if (format_fixed(target, 11) != printed)
    r.add("note: log(pi/3) rounds to " + format_fixed(target, 11) + " at 11 digits, not the quoted " +
          printed);
  return d < dec("1e-12", p);
}

bool criterion5(Report &r) {
  const prec_t p = 256;
  auto sq = tail_fit(TailModel::SqrtLog, ConstantsSource::Paper, p);
  auto lg = tail_fit(TailModel::Log, ConstantsSource::Paper, p);
  BigReal dsq = abs(sq.a - dec("-0.3869721386", p));
  BigReal dlg = abs(lg.a - dec("-0.1596", p));
  bool sq_ok = dsq <= dec("1e-9", p);
  bool lg_ok = dlg <= dec("1e-4", p);
  bool flagged = !lg.notes.empty() && lg.printed_a == "-1.59599";
  r.add("sqrt model: a = " + format_fixed(sq.a, 12) + " vs -0.3869721386, diff " + sci(dsq) +
        " (tolerance 1e-9): " + (sq_ok ? "ok" : "outside"));
  r.add("sqrt model inputs: partial " + format_fixed(sq.partial_sum, 11) + ", tails " +
        format_fixed(sq.tail_nlogn, 13) + ", " + format_fixed(sq.tail_cn, 13) + ", " +
        format_fixed(sq.tail_model, 13) + ", target " + format_fixed(sq.target, 15));
  r.add("log model: a = " + format_fixed(lg.a, 12) + " vs -0.1596 +- 1e-4: " +
        (lg_ok ? "ok" : "outside") + "; printed " + lg.printed_a +
        (flagged ? " (discrepancy flagged)" : " (discrepancy NOT flagged)"));
  for (const auto &n : lg.notes)
    r.add("log model note: " + n);
  r.add("residuals: " + sci(abs(sq.residual())) + ", " + sci(abs(lg.residual())));
  return sq_ok && lg_ok && flagged;
}

bool criterion6(Report &r) {
  const prec_t p = 128;
  auto env = envelope_data(30, dec("1.596", p), dec("0.386", p), false, p);
  r.add("crossing at n = " + format_fixed(env.crossing, 6) + " (expected in (16.5, 17.5))");
  return env.crossing > dec("16.5", p) && env.crossing < dec("17.5", p);
}

bool criterion7(Report &r) {
  const prec_t p = 256;
  const BigReal two(2L, p);
  BoundReport ref = check_bounds(reference_tiny_values(p), {two}, p);
  bool ok = true;

  for (const auto *c : ref.select(BoundFamily::LinearGamma)) {
    if (c->source != DataSource::Table)
      continue;
    if (c->verdict != Verdict::Satisfied) {
      ok = false;
      r.add("gamma*n violated at table row n = " + std::to_string(c->n));
    }
  }
  // equality at n = 1 holds for the exact value
  BoundReport computed = check_bounds(computed_tiny_values(li_coefficients(1, 256)), {}, p);
  const BoundCheck *one = computed.select(BoundFamily::LinearGamma).front();
  r.add("computed n = 1: margin to gamma*n is " + format_fixed(one->margin, 20) + " (" +
        to_string(one->verdict) + ")");
  ok = ok && one->verdict == Verdict::Satisfied && one->margin.is_zero();

  int not_applicable = 0, satisfied = 0;
  for (const auto *c : ref.select(BoundFamily::Logarithmic, two)) {
    if (c->verdict == Verdict::NotApplicable)
      ++not_applicable;
    else if (c->verdict == Verdict::Satisfied)
      ++satisfied;
    else {
      ok = false;
      r.add("2 log n violated at n = " + std::to_string(c->n) + " (" +
            std::string(to_string(c->source)) + ")");
    }
  }
  r.add("2 log n: " + std::to_string(satisfied) + " rows satisfied, " +
        std::to_string(not_applicable) + " not applicable (n = 1, where log n = 0)");
  const BoundCheck *tight = ref.tightest(BoundFamily::Logarithmic, two);
  r.add("tightest 2 log n margin: " + format_fixed(tight->margin, 6) + " at n = " +
        std::to_string(tight->n));
  return ok && tight->n == 5080;
}

bool criterion8(Report &r) {
  const prec_t p = 256;
  auto rows = asymptotic_logxi(10, 200, p);
  bool ok = true;
  for (const auto &row : rows)
    if (!(abs(row.err_corrected) < abs(row.err_verbatim))) {
      ok = false;
      r.add("|err_corrected| >= |err_verbatim| at N = " + std::to_string(row.N));
    }
  const BigReal ratio = rows.back().err_verbatim / 200L;
  const BigReal half_log_pi = const_log_pi(p) / 2L;
  const BigReal rel = abs(ratio / half_log_pi - 1L);
  r.add("err_verbatim(200)/200 = " + format_fixed(ratio, 8) + ", (1/2) log pi = " +
        format_fixed(half_log_pi, 8) + ", relative gap " + format_fixed(rel, 5));
  r.add("err_corrected(10) = " + format_fixed(rows.front().err_corrected, 8) +
        ", err_corrected(200) = " + format_fixed(rows.back().err_corrected, 8));
  return ok && rel < dec("0.01", p);
}

bool criterion9(Report &r) {
  bool ok = true;
  const long N = 32;
  const prec_t p = 512;
  const BigReal tol = dec("1e-20", p);

  // two routes for the tiny coefficients
  {
    const prec_t wp = li_working_precision(N, p);
    TruncatedSeries tu = tiny_u_series(N, wp);
    auto pulled = binomial_pullback(tu, N);
    auto composed = series_compose(tu, u_of_z(N, wp));
    BigReal worst(p);
    for (long n = 1; n <= N; ++n)
      worst = max(worst, abs(pulled[static_cast<std::size_t>(n)] -
                             composed[static_cast<std::size_t>(n)]) * n);
    r.add("pullback vs compose, n <= 32: max diff " + sci(worst));
    ok = ok && worst < tol;
  }

  LiTable lo = li_coefficients(N, p);
  {
    BigReal worst(p);
    for (const auto &row : lo.rows)
      worst = max(worst, abs(row.trend + row.tiny - row.full));
    r.add("trend + tiny - full, n <= 32: max " + sci(worst));
    ok = ok && worst < tol;
  }
  {
    LiTable hi = li_coefficients(N, 2 * p);
    bool same = true;
    for (std::size_t i = 0; i < lo.rows.size(); ++i)
      for (auto [a, b] : {std::pair{&lo.rows[i].trend, &hi.rows[i].trend},
                          {&lo.rows[i].tiny, &hi.rows[i].tiny},
                          {&lo.rows[i].full, &hi.rows[i].full}})
        same = same && format_fixed(*a, 12) == format_fixed(*b, 12) &&
               abs(*a - *b) < dec("1e-12", p);
    r.add(std::string("precision doubling 512 -> 1024 bits: emitted 12-digit values ") +
          (same ? "unchanged" : "CHANGED"));
    ok = ok && same;
  }
  {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> dist(-1, 1);
    BigReal worst(256);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BigReal> c{BigReal(1L, 256)};
      for (int k = 1; k <= 30; ++k)
        c.emplace_back(dist(rng), 256);
      TruncatedSeries a(Variable::Z, c);
      TruncatedSeries back = series_exp(series_log(a));
      for (std::size_t k = 0; k <= a.order(); ++k)
        worst = max(worst, scaled_distance(back[k], a[k]));
    }
    r.add("series exp(log a) round trips: max relative error " + sci(worst));
    ok = ok && worst < pow2(-200, 256);
  }
  {
    const char *path = std::getenv("LIKEIPER_ZEROS_FILE");
    std::optional<ZeroTable> zeros;
    if (path != nullptr)
      zeros = load_zeros(path, 128);
    if (!zeros || zeros->count() < 100000) {
      r.add("zeros oracle: skipped (set LIKEIPER_ZEROS_FILE to a file with >= 1e5 ordinates)");
    } else {
      auto e = lambda_from_zeros(1, *zeros, 128);
      BigReal diff = abs(e.estimate - lo.rows[0].full);
      r.add("zeros oracle: lambda_1 from " + std::to_string(zeros->count()) + " zeros, diff " +
            sci(diff) + ", tail bound " + sci(e.tail_bound));
      ok = ok && diff <= e.tail_bound * 3L;
    }
  }
  return ok;
}

bool criterion10(Report &r) {
  bool refused = false;
  try {
    conjecture_table(500, 256);
  } catch (const std::invalid_argument &) {
    refused = true;
  }
  r.add(std::string("recomputation at n = 500 ") + (refused ? "refused" : "NOT refused") +
        " (cap " + std::to_string(conjecture_table_cap) + ")");
  const prec_t p = 128;
  BoundReport ref = check_bounds(reference_tiny_values(p), {BigReal(2L, p), BigReal(5L, p)}, p);
  std::set<long> covered;
  for (const auto &c : ref.checks)
    if (c.n >= 500)
      covered.insert(c.n);
  r.add(std::to_string(covered.size()) + " fixture rows with n >= 500 covered by bound checks only");
  bool annotated = false;
  for (const auto &n : ref.notes)
    annotated = annotated || n.find("at least 5") != std::string::npos;
  r.add(std::string("n ~ 80000 claim ") + (annotated ? "recorded as annotation" : "missing"));
  return refused && !covered.empty() && annotated;
}

const std::map<int, std::pair<std::string, std::function<bool(Report &)>>> &criteria() {
  static const std::map<int, std::pair<std::string, std::function<bool(Report &)>>> c{
      {1, {"tiny coefficients vs table, n = 1..31", criterion1}},
      {2, {"figure anchors lambda_tiny(5), lambda_tiny(6)/6", criterion2}},
      {3, {"partial sum at z = 1/2, N = 15", criterion3}},
      {4, {"identity convergence at z = 1/2, N = 60", criterion4}},
      {5, {"tail fit with printed constants", criterion5}},
      {6, {"envelope crossing", criterion6}},
      {7, {"bound suite on reference rows", criterion7}},
      {8, {"asymptotics of log xi(N)", criterion8}},
      {9, {"property suite", criterion9}},
      {10, {"desk-scale limits", criterion10}},
  };
  return c;
}

} // namespace

int main(int argc, char **argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc)
      selected.push_back(std::atoi(argv[++i]));
    else {
      std::cerr << "usage: likeiper_acceptance [--criterion K]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto &[k, _] : criteria())
      selected.push_back(k);

  bool all = true;
  for (int k : selected) {
    auto it = criteria().find(k);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << k << '\n';
      return 2;
    }
    Report report;
    bool ok = false;
    try {
      ok = it->second.second(report);
    } catch (const std::exception &e) {
      report.add(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << " (" << it->second.first << "): " << (ok ? "PASS" : "FAIL")
              << '\n';
    for (const auto &d : report.details)
      std::cout << "    " << d << '\n';
    all = all && ok;
  }
  return all ? 0 : 1;
}
