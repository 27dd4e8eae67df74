#ifndef LIKEIPER_CLI_HPP
#define LIKEIPER_CLI_HPP

// Command-line front end. Every subcommand writes a fixed set of columns as
// CSV (default) or as a JSON array with the same fields; see README.md.

#include "errors.hpp"
#include "experiments.hpp"
#include "format.hpp"
#include "li.hpp"
#include "reference_data.hpp"
#include "zeros.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace likeiper::cli {

/// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_computation = 3;

struct RunConfig {
  long prec_bits = 0; ///< 0 selects a default per subcommand
  long n_max = 0;     ///< 0 selects a default per subcommand
  int digits = 12;
  double radius = 0.25;
  long dft_points = 0;
  long max_dft_points = 1L << 15;
  OutputFormat out_format = OutputFormat::Csv;
  std::string zeros_file;
  long zeros_limit = 0;

  // subcommand specific
  std::string z = "0.5";
  long n_min = 10;
  long n = 5;
  std::string model = "sqrtlog";
  std::string constants = "paper";
  std::string convention = "reciprocal";
  std::string c_variant = "half";
  std::string source = "computed";
  std::string sweep = "dft-points";
  std::vector<std::string> a_values{"2", "5"};
  std::string a_log = "1.596";
  std::string a_sqrt = "0.386";
  bool include_main = false;

  CircleOptions circle() const {
    CircleOptions opt;
    opt.radius = radius;
    opt.dft_points = dft_points;
    opt.max_points = max_dft_points;
    return opt;
  }

  prec_t precision_or(prec_t fallback) const {
    return prec_bits > 0 ? static_cast<prec_t>(prec_bits) : fallback;
  }
};

namespace detail {

struct Output {
  std::vector<std::string> header;
  std::vector<Record> records;
  std::vector<std::string> notes; ///< written to the error stream as '# ' lines
};

inline std::string fixed(const BigReal &x, const RunConfig &cfg) {
  return format_fixed(x, cfg.digits);
}

inline long n_max_or(const RunConfig &cfg, long fallback) {
  return cfg.n_max > 0 ? cfg.n_max : fallback;
}

inline Output run_li(const RunConfig &cfg, const std::string &which) {
  const long n_max = n_max_or(cfg, 10);
  const prec_t prec = cfg.precision_or(default_li_precision(n_max));
  Output out;
  if (which == "lambda") {
    LiTable t = li_coefficients(n_max, prec, cfg.circle());
    out.header = {"n", "lambda_trend", "lambda_tiny", "lambda"};
    for (const auto &r : t.rows)
      out.records.push_back(Record()
                                .add("n", std::to_string(r.n))
                                .add("lambda_trend", fixed(r.trend, cfg))
                                .add("lambda_tiny", fixed(r.tiny, cfg))
                                .add("lambda", fixed(r.full, cfg)));
    return out;
  }
  const bool tiny = which == "tiny";
  auto values = tiny ? tiny_coefficients(n_max, prec, cfg.circle())
                     : trend_coefficients(n_max, prec);
  const std::string column = tiny ? "lambda_tiny" : "lambda_trend";
  out.header = {"n", column};
  for (std::size_t i = 0; i < values.size(); ++i)
    out.records.push_back(
        Record().add("n", std::to_string(i + 1)).add(column, fixed(values[i], cfg)));
  return out;
}

inline Output run_table(const RunConfig &cfg) {
  const long n_max = n_max_or(cfg, 31);
  const prec_t prec = cfg.precision_or(default_li_precision(n_max));
  Output out;
  out.header = {"n", "ratio", "lambda_tiny", "two_log_n"};
  for (const auto &r : conjecture_table(n_max, prec, cfg.circle()))
    out.records.push_back(Record()
                              .add("n", std::to_string(r.n))
                              .add("ratio", fixed(r.ratio, cfg))
                              .add("lambda_tiny", fixed(r.tiny, cfg))
                              .add("two_log_n", r.two_log_n ? fixed(*r.two_log_n, cfg) : ""));
  return out;
}

inline Output run_bounds(const RunConfig &cfg) {
  std::vector<TinyValue> values;
  prec_t prec = 0;
  if (cfg.source == "reference") {
    prec = cfg.precision_or(256);
    values = reference_tiny_values(prec);
  } else {
    const long n_max = n_max_or(cfg, 31);
    prec = cfg.precision_or(default_li_precision(n_max));
    values = computed_tiny_values(li_coefficients(n_max, prec, cfg.circle()));
  }
  std::vector<BigReal> a_values;
  for (const auto &a : cfg.a_values)
    a_values.push_back(BigReal::from_string(a, prec));
  BoundReport report = check_bounds(values, a_values, prec);

  Output out;
  out.header = {"n", "source", "lambda_tiny", "bound", "a", "limit", "margin", "verdict"};
  for (const auto &c : report.checks)
    out.records.push_back(Record()
                              .add("n", std::to_string(c.n))
                              .add("source", std::string(to_string(c.source)))
                              .add("lambda_tiny", fixed(c.tiny, cfg))
                              .add("bound", bound_family_name(c.family))
                              .add("a", c.a ? fixed(*c.a, cfg) : "")
                              .add("limit", fixed(c.limit, cfg))
                              .add("margin", fixed(c.margin, cfg))
                              .add("verdict", to_string(c.verdict)));
  for (const auto &family : {BoundFamily::LinearF1, BoundFamily::LinearGamma}) {
    if (const BoundCheck *t = report.tightest(family, std::nullopt))
      out.notes.push_back(bound_family_name(family) + ": tightest margin " +
                          fixed(t->margin, cfg) + " at n = " + std::to_string(t->n));
  }
  for (const auto &a : a_values)
    if (const BoundCheck *t = report.tightest(BoundFamily::Logarithmic, a))
      out.notes.push_back("a = " + fixed(a, cfg) + " log(n): tightest margin " +
                          fixed(t->margin, cfg) + " at n = " + std::to_string(t->n));
  out.notes.insert(out.notes.end(), report.notes.begin(), report.notes.end());
  return out;
}

inline Output run_identity(const RunConfig &cfg) {
  const long n_max = n_max_or(cfg, 15);
  const prec_t prec = cfg.precision_or(default_li_precision(n_max));
  const BigReal z = BigReal::from_string(cfg.z, prec);
  BigReal partial = identity_sum(z, n_max, prec, cfg.circle());
  BigReal closed = identity_closed_form(z, prec);
  Output out;
  out.header = {"z", "n_max", "partial_sum", "closed_form", "difference"};
  out.records.push_back(Record()
                            .add("z", cfg.z)
                            .add("n_max", std::to_string(n_max))
                            .add("partial_sum", fixed(partial, cfg))
                            .add("closed_form", fixed(closed, cfg))
                            .add("difference", fixed(partial - closed, cfg)));
  return out;
}

inline Output run_tailfit(const RunConfig &cfg) {
  const prec_t prec = cfg.precision_or(256);
  const TailModel model = cfg.model == "log" ? TailModel::Log : TailModel::SqrtLog;
  const ConstantsSource source =
      cfg.constants == "recomputed" ? ConstantsSource::Recomputed : ConstantsSource::Paper;
  const TailConvention convention =
      cfg.convention == "plain" ? TailConvention::Plain : TailConvention::WithReciprocal;
  const TrendConstant c_variant = cfg.c_variant == "full" ? TrendConstant::Full
                                                         : TrendConstant::Half;
  std::optional<LiTable> table;
  if (source == ConstantsSource::Recomputed)
    table = li_coefficients(15, std::max(prec, default_li_precision(15)), cfg.circle());
  TailFitResult r = tail_fit(model, source, prec, table ? &*table : nullptr, convention,
                             c_variant);
  Output out;
  out.header = {"model",  "constants",  "partial_sum", "tail_nlogn",
                "tail_cn", "tail_trend", "tail_model",  "target",
                "a",       "printed_a",  "residual"};
  out.records.push_back(Record()
                            .add("model", cfg.model)
                            .add("constants", cfg.constants)
                            .add("partial_sum", fixed(r.partial_sum, cfg))
                            .add("tail_nlogn", fixed(r.tail_nlogn, cfg))
                            .add("tail_cn", fixed(r.tail_cn, cfg))
                            .add("tail_trend", fixed(r.tail_trend, cfg))
                            .add("tail_model", fixed(r.tail_model, cfg))
                            .add("target", fixed(r.target, cfg))
                            .add("a", fixed(r.a, cfg))
                            .add("printed_a", r.printed_a)
                            .add("residual", fixed(r.residual(), cfg)));
  out.notes = r.notes;
  return out;
}

inline Output run_asymptotic(const RunConfig &cfg) {
  const long n_max = n_max_or(cfg, 200);
  const prec_t prec = cfg.precision_or(256);
  Output out;
  out.header = {"N",        "exact",        "approx_verbatim", "approx_corrected",
                "err_verbatim", "err_corrected"};
  for (const auto &r : asymptotic_logxi(cfg.n_min, n_max, prec))
    out.records.push_back(Record()
                              .add("N", std::to_string(r.N))
                              .add("exact", fixed(r.exact, cfg))
                              .add("approx_verbatim", fixed(r.approx_verbatim, cfg))
                              .add("approx_corrected", fixed(r.approx_corrected, cfg))
                              .add("err_verbatim", fixed(r.err_verbatim, cfg))
                              .add("err_corrected", fixed(r.err_corrected, cfg)));
  return out;
}

inline Output run_envelope(const RunConfig &cfg) {
  const long n_max = n_max_or(cfg, 40);
  const prec_t prec = cfg.precision_or(128);
  const TrendConstant c_variant = cfg.c_variant == "full" ? TrendConstant::Full
                                                         : TrendConstant::Half;
  EnvelopeResult env = envelope_data(n_max, BigReal::from_string(cfg.a_log, prec),
                                     BigReal::from_string(cfg.a_sqrt, prec), cfg.include_main,
                                     prec, c_variant);
  Output out;
  out.header = {"n",           "cn",          "cn_plus_sqrt", "cn_minus_sqrt",
                "cn_plus_log", "cn_minus_log"};
  for (const auto &r : env.rows)
    out.records.push_back(Record()
                              .add("n", std::to_string(r.n))
                              .add("cn", fixed(r.cn, cfg))
                              .add("cn_plus_sqrt", fixed(r.sqrt_plus, cfg))
                              .add("cn_minus_sqrt", fixed(r.sqrt_minus, cfg))
                              .add("cn_plus_log", fixed(r.log_plus, cfg))
                              .add("cn_minus_log", fixed(r.log_minus, cfg)));
  out.notes.push_back("c = " + fixed(env.c, cfg));
  out.notes.push_back("crossing of a_sqrt sqrt(n) log(n) and a_log log(n) at n = " +
                      fixed(env.crossing, cfg));
  return out;
}

inline Output run_zeros_check(const RunConfig &cfg) {
  if (cfg.zeros_file.empty())
    throw std::invalid_argument("zeros-check requires --zeros-file");
  const long n_max = n_max_or(cfg, 10);
  const prec_t prec = cfg.precision_or(default_li_precision(n_max));
  std::optional<std::size_t> limit;
  if (cfg.zeros_limit > 0)
    limit = static_cast<std::size_t>(cfg.zeros_limit);
  ZeroTable zeros = load_zeros(cfg.zeros_file, prec, limit);
  LiTable table = li_coefficients(n_max, prec, cfg.circle());
  Output out;
  out.header = {"n", "zeros_used", "estimate", "tail_bound", "lambda", "difference"};
  for (const auto &row : table.rows) {
    ZeroSumEstimate e = lambda_from_zeros(row.n, zeros, prec);
    out.records.push_back(Record()
                              .add("n", std::to_string(row.n))
                              .add("zeros_used", std::to_string(zeros.count()))
                              .add("estimate", fixed(e.estimate, cfg))
                              .add("tail_bound", fixed(e.tail_bound, cfg))
                              .add("lambda", fixed(row.full, cfg))
                              .add("difference", fixed(e.estimate - row.full, cfg)));
  }
  return out;
}

inline Output run_diagnostics(const RunConfig &cfg) {
  const Sweep sweep = cfg.sweep == "precision" ? Sweep::Precision : Sweep::DftPoints;
  Output out;
  const std::string column = sweep == Sweep::Precision ? "prec_bits" : "dft_points";
  out.header = {column, "lambda_tiny"};
  for (const auto &r : convergence_diagnostics(cfg.n, sweep, cfg.circle()))
    out.records.push_back(
        Record().add(column, std::to_string(r.parameter)).add("lambda_tiny", fixed(r.estimate, cfg)));
  return out;
}

inline void add_common(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--prec-bits", cfg.prec_bits, "working precision in bits (default: per command)")
      ->check(CLI::Range(64L, 1L << 20));
  sub->add_option("--digits", cfg.digits, "decimal digits after the point (default 12)")
      ->check(CLI::Range(0, 10000));
  sub->add_option("--out", cfg.out_format, "output format: csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                              {"json", OutputFormat::Json}},
          CLI::ignore_case));
}

inline void add_circle(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--radius", cfg.radius, "circle radius for the Stieltjes extraction")
      ->check([](const std::string &v) -> std::string {
        double r = std::stod(v);
        return r > 0 && r < 0.5 ? "" : "radius must lie in (0, 1/2)";
      });
  sub->add_option("--dft-points", cfg.dft_points, "initial number of circle points")
      ->check(CLI::Range(2L, 1L << 20));
  sub->add_option("--max-dft-points", cfg.max_dft_points,
                  "cap for the doubling of circle points (default 32768)")
      ->check(CLI::Range(2L, 1L << 22));
}

inline void add_n_max(CLI::App *sub, RunConfig &cfg, const std::string &help) {
  sub->add_option("--n-max", cfg.n_max, help)->check(CLI::Range(1L, 100000L));
}

} // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and notes to `err`. Returns the process exit status.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Li-Keiper coefficients of the Riemann xi function", "likeiper"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  std::map<CLI::App *, std::string> names;
  auto sub = [&](const std::string &name, const std::string &help) {
    CLI::App *s = app.add_subcommand(name, help);
    detail::add_common(s, cfg);
    names[s] = name;
    return s;
  };

  for (const char *name : {"lambda", "tiny", "trend"}) {
    CLI::App *s = sub(name, std::string("lambda coefficients (") + name + ") for n = 1..N");
    detail::add_n_max(s, cfg, "largest n (default 10)");
    if (std::string(name) != "trend")
      detail::add_circle(s, cfg);
  }

  CLI::App *table = sub("table", "n, lambda_tiny/(n gamma), lambda_tiny, 2 log n");
  detail::add_n_max(table, cfg, "largest n, at most 128 (default 31)");
  detail::add_circle(table, cfg);

  CLI::App *bounds = sub("bounds", "check |lambda_tiny| against 0.58158 n, gamma n, a log n");
  detail::add_n_max(bounds, cfg, "largest n for --source computed (default 31)");
  detail::add_circle(bounds, cfg);
  bounds->add_option("--source", cfg.source, "computed or reference")
      ->check(CLI::IsMember({"computed", "reference"}));
  bounds->add_option("--a-values", cfg.a_values, "amplitudes a for the a log n bound")
      ->delimiter(',');

  CLI::App *identity = sub("identity", "partial sum of lambda_n z^n / n and its closed form");
  detail::add_n_max(identity, cfg, "number of terms (default 15)");
  detail::add_circle(identity, cfg);
  identity->add_option("--z", cfg.z, "real z with |z| < 1 (default 0.5)");

  CLI::App *tailfit = sub("tailfit", "solve for the oscillation amplitude a at z = 1/2");
  tailfit->add_option("--model", cfg.model, "log or sqrtlog")
      ->check(CLI::IsMember({"log", "sqrtlog"}));
  tailfit->add_option("--constants", cfg.constants, "paper or recomputed")
      ->check(CLI::IsMember({"paper", "recomputed"}));
  tailfit->add_option("--convention", cfg.convention,
                      "tail summation for recomputed constants: reciprocal (f(n) 2^-n / n) "
                      "or plain (f(n) 2^-n)")
      ->check(CLI::IsMember({"reciprocal", "plain"}));
  tailfit->add_option("--c-variant", cfg.c_variant, "trend constant: half or full")
      ->check(CLI::IsMember({"half", "full"}));
  detail::add_circle(tailfit, cfg);

  CLI::App *asym = sub("asymptotic", "log xi(N) against its Stirling approximation");
  asym->add_option("--n-min", cfg.n_min, "first N (default 10)")->check(CLI::Range(2L, 100000L));
  detail::add_n_max(asym, cfg, "last N (default 200)");

  CLI::App *env = sub("envelope", "envelope curves c n +- a sqrt(n) log n and c n +- a log n");
  detail::add_n_max(env, cfg, "largest n (default 40)");
  env->add_option("--a-log", cfg.a_log, "amplitude of the log envelope (default 1.596)");
  env->add_option("--a-sqrt", cfg.a_sqrt, "amplitude of the sqrt log envelope (default 0.386)");
  env->add_flag("--include-main", cfg.include_main, "add (n/2) log n to every column");
  env->add_option("--c-variant", cfg.c_variant, "trend constant: half or full")
      ->check(CLI::IsMember({"half", "full"}));

  CLI::App *zeros = sub("zeros-check", "lambda_n from a list of zeta zeros against the series value");
  detail::add_n_max(zeros, cfg, "largest n (default 10)");
  detail::add_circle(zeros, cfg);
  zeros->add_option("--zeros-file", cfg.zeros_file, "text file of zero ordinates")->required();
  zeros->add_option("--zeros-limit", cfg.zeros_limit, "read at most K ordinates")
      ->check(CLI::PositiveNumber);

  CLI::App *diag = sub("diagnostics", "lambda_tiny(n) over a sweep of circle points or precision");
  diag->add_option("--n", cfg.n, "index n, at most 32 (default 5)")->check(CLI::Range(1L, 32L));
  diag->add_option("--sweep", cfg.sweep, "dft-points or precision")
      ->check(CLI::IsMember({"dft-points", "precision"}));
  detail::add_circle(diag, cfg);

  std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return exit_ok;
    }
    app.exit(e, out, err);
    return exit_usage;
  }

  std::string command;
  for (const auto &[ptr, name] : names)
    if (ptr->parsed())
      command = name;

  try {
    detail::Output result;
    if (command == "lambda" || command == "tiny" || command == "trend")
      result = detail::run_li(cfg, command);
    else if (command == "table")
      result = detail::run_table(cfg);
    else if (command == "bounds")
      result = detail::run_bounds(cfg);
    else if (command == "identity")
      result = detail::run_identity(cfg);
    else if (command == "tailfit")
      result = detail::run_tailfit(cfg);
    else if (command == "asymptotic")
      result = detail::run_asymptotic(cfg);
    else if (command == "envelope")
      result = detail::run_envelope(cfg);
    else if (command == "zeros-check")
      result = detail::run_zeros_check(cfg);
    else
      result = detail::run_diagnostics(cfg);
    write_records(out, result.records, cfg.out_format, result.header);
    for (const auto &note : result.notes)
      err << "# " << note << '\n';
    return exit_ok;
  } catch (const precision_failure &e) {
    err << "likeiper: precision failure: " << e.what() << '\n';
    return exit_computation;
  } catch (const internal_consistency_error &e) {
    err << "likeiper: internal consistency check failed: " << e.what() << '\n';
    return exit_computation;
  } catch (const parse_error &e) {
    err << "likeiper: " << e.what() << '\n';
    return exit_usage;
  } catch (const validation_error &e) {
    err << "likeiper: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument &e) {
    err << "likeiper: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::domain_error &e) {
    err << "likeiper: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::runtime_error &e) {
    err << "likeiper: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace likeiper::cli

#endif // LIKEIPER_CLI_HPP
