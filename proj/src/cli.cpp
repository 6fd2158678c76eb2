#include "concat_equidist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "concat_equidist/asymptotics.hpp"
#include "concat_equidist/counting.hpp"
#include "concat_equidist/equidist.hpp"
#include "concat_equidist/errors.hpp"
#include "concat_equidist/report_io.hpp"

namespace concat_equidist::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  // sequence spec
  std::string kind;
  std::string k = "1";
  std::string coeffs;
  int base = 10;
  // tail
  std::uint64_t n = 1;
  std::size_t digits = 0;
  // count / scan / discrepancy
  std::string lo = "0.1";
  std::string hi = "0.2";
  std::string alpha = "0.1";
  std::string beta = "1";
  std::uint64_t N = 0;
  bool no_fast_path = false;
  std::size_t max_digits = 0;
  bool extreme = false;
  int jmax = kMaxLinearJ;
  int Jmax = kMaxPolyJ;
  int dmax = 10;
  // benford / discrepancy input
  std::string gen;
  std::string input;
  // output
  std::string format = "csv";
  std::string output;
  unsigned threads = 0;
  bool uncapped = false;
};

void add_spec_options(CLI::App* cmd, RunConfig& cfg, bool required) {
  auto* kind = cmd->add_option("--kind", cfg.kind, "Sequence family")
                   ->check(CLI::IsMember({"champ", "mult", "poly"}));
  if (required) kind->required();
  cmd->add_option("--k", cfg.k, "Multiplier for --kind mult");
  cmd->add_option("--coeffs", cfg.coeffs, "Polynomial coefficients, constant first: 0,0,1 = n^2");
  cmd->add_option("--base", cfg.base, "Digit base")->check(CLI::Range(2, 36));
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", cfg.output, "Write to this file instead of stdout");
  cmd->add_option("--threads", cfg.threads, "Worker threads (default CONCAT_EQUIDIST_THREADS)");
  cmd->add_flag("--unsafe-uncapped", cfg.uncapped, "Lift the default size caps");
}

TailSpec make_spec(const RunConfig& cfg) {
  if (cfg.kind == "champ") return TailSpec::champernowne(cfg.base);
  if (cfg.kind == "mult") {
    auto k = parse_big(cfg.k);
    if (!k) throw UsageError("--k must be an integer");
    return TailSpec::multiple(*k, cfg.base);
  }
  if (cfg.coeffs.empty()) throw UsageError("--kind poly requires --coeffs");
  return TailSpec::polynomial(IntPoly::parse(cfg.coeffs), cfg.base);
}

HalfOpenInterval make_interval(const std::string& lo, const std::string& hi, int base) {
  return HalfOpenInterval(ExactEndpoint::parse(lo, base), ExactEndpoint::parse(hi, base));
}

void check_cap(bool uncapped, unsigned long long value, unsigned long long cap, const char* what) {
  if (!uncapped && value > cap) {
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds the cap " +
                     std::to_string(cap) + " (use --unsafe-uncapped)");
  }
}

CountOptions count_options(const RunConfig& cfg) {
  CountOptions o;
  o.fast_path = !cfg.no_fast_path;
  o.threads = cfg.threads;
  o.max_digits = cfg.max_digits;
  return o;
}

void emit(const RunConfig& cfg, const Table& table, std::ostream& out) {
  if (cfg.format == "json") {
    out << to_json(table).dump(2) << '\n';
  } else {
    write_csv(out, table);
  }
}

std::vector<BigInt> generated_terms(const RunConfig& cfg) {
  if (cfg.N == 0) throw UsageError("--gen requires --N >= 1");
  std::vector<BigInt> terms;
  terms.reserve(cfg.N);
  if (cfg.gen == "naturals") {
    check_cap(cfg.uncapped, cfg.N, kMaxIndices, "N");
    for (std::uint64_t n = 1; n <= cfg.N; ++n) terms.push_back(big_from_u64(n));
  } else if (cfg.gen == "pow2") {
    check_cap(cfg.uncapped, cfg.N, kMaxPow2Terms, "N");
    BigInt p = 1;
    for (std::uint64_t n = 1; n <= cfg.N; ++n) {
      p *= 2;
      terms.push_back(p);
    }
  } else {
    check_cap(cfg.uncapped, cfg.N, kMaxIndices, "N");
    if (cfg.coeffs.empty()) throw UsageError("--gen poly requires --coeffs");
    const TailSpec spec = TailSpec::polynomial(IntPoly::parse(cfg.coeffs));
    TermCursor cursor(spec, spec.first_index());
    for (std::uint64_t i = 0; i < cfg.N; ++i, cursor.advance()) terms.push_back(cursor.value());
  }
  return terms;
}

std::vector<BigInt> input_terms(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw DomainError("cannot read " + cfg.input);
    auto terms = read_integer_lines(in);
    if (terms.empty()) throw DomainError(cfg.input + ": no integers");
    return terms;
  }
  if (cfg.gen.empty()) throw UsageError("need --gen or --file");
  return generated_terms(cfg);
}

int cmd_tail(const RunConfig& cfg, std::ostream& out) {
  if (cfg.digits == 0) throw UsageError("--digits must be >= 1");
  const TailSpec spec = make_spec(cfg);
  out << "0." << tail_digits(spec, cfg.n, cfg.digits).to_string() << '\n';
  return kSuccess;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.N == 0) throw UsageError("--N must be >= 1");
  check_cap(cfg.uncapped, cfg.N, kMaxIndices, "N");
  const TailSpec spec = make_spec(cfg);
  const auto result = count_A(spec, make_interval(cfg.lo, cfg.hi, cfg.base), cfg.N, count_options(cfg));
  emit(cfg, count_table(result, spec.label()), out);
  return kSuccess;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const TailSpec spec = make_spec(cfg);
  std::vector<ScanPoint> points;
  if (spec.kind() == TailKind::Polynomial) {
    check_cap(cfg.uncapped, static_cast<unsigned long long>(std::max(cfg.Jmax, 0)), kMaxPolyJ, "Jmax");
    points = subsequence_points_poly(spec.poly(), cfg.Jmax);
  } else {
    check_cap(cfg.uncapped, static_cast<unsigned long long>(std::max(cfg.jmax, 0)), kMaxLinearJ, "jmax");
    auto sub = subsequence_points_linear(spec.k(), cfg.jmax);
    if (sub.points.empty()) {
      throw UsageError("no scan points: j must be at least " + std::to_string(sub.first_valid_j) +
                       " for k = " + spec.k().get_str());
    }
    points = std::move(sub.points);
  }
  if (points.empty()) throw UsageError("no scan points for this polynomial and Jmax");
  check_cap(cfg.uncapped, points.back().N, kMaxIndices, "N");
  const auto report =
      ratio_scan(spec, make_interval(cfg.lo, cfg.hi, cfg.base), points, count_options(cfg));
  emit(cfg, scan_table(report), out);
  return kSuccess;
}

int cmd_discrepancy(const RunConfig& cfg, std::ostream& out) {
  Table t;
  if (!cfg.kind.empty()) {
    if (cfg.N == 0) throw UsageError("--N must be >= 1");
    check_cap(cfg.uncapped, cfg.N, kMaxIndices, "N");
    const TailSpec spec = make_spec(cfg);
    const PointSet points = tail_points(spec, spec.first_index(), cfg.N);
    const auto alpha = ExactEndpoint::parse(cfg.alpha, cfg.base);
    const auto beta = ExactEndpoint::parse(cfg.beta, cfg.base);
    t.header = {"spec", "alpha", "beta", "N", "ud_deviation", "extreme_deviation", "weyl_h1"};
    t.rows.push_back({spec.label(), alpha.to_string(), beta.to_string(), cfg.N,
                      ud_deviation(points, alpha, beta, DiscrepancyKind::Star),
                      ud_deviation(points, alpha, beta, DiscrepancyKind::Extreme),
                      weyl_sum(points, 1)});
  } else {
    const auto terms = input_terms(cfg);
    const PointSet points = log_fracparts(terms);
    t.header = {"source", "N", "star_discrepancy", "extreme_discrepancy", "weyl_h1", "weyl_h2",
                "weyl_h3"};
    t.rows.push_back({cfg.input.empty() ? cfg.gen : cfg.input,
                      static_cast<std::uint64_t>(points.size()), star_discrepancy(points),
                      extreme_discrepancy(points), weyl_sum(points, 1), weyl_sum(points, 2),
                      weyl_sum(points, 3)});
  }
  emit(cfg, t, out);
  return kSuccess;
}

int cmd_benford(const RunConfig& cfg, std::ostream& out) {
  const auto terms = input_terms(cfg);
  emit(cfg, benford_table(benford_report(terms)), out);
  return kSuccess;
}

int cmd_limits(const RunConfig& cfg, std::ostream& out) {
  if (cfg.dmax < 1) throw UsageError("--dmax must be >= 1");
  emit(cfg, limits_table(cfg.dmax), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Concatenation-tail sequences: digits, counting, scans and Benford statistics",
               "concat-equidist"};
  app.require_subcommand(1);

  auto* tail = app.add_subcommand("tail", "Print the first digits of x_n");
  add_spec_options(tail, cfg, true);
  tail->add_option("--n", cfg.n, "Tail index")->required();
  tail->add_option("--digits", cfg.digits, "Number of digits")->required();

  auto* count = app.add_subcommand("count", "Count x_n in [lo,hi) for N indices");
  add_spec_options(count, cfg, true);
  count->add_option("--lo", cfg.lo, "Lower endpoint (terminating decimal)");
  count->add_option("--hi", cfg.hi, "Upper endpoint (terminating decimal)");
  count->add_option("--N", cfg.N, "Number of indices")->required();
  count->add_flag("--no-fast-path", cfg.no_fast_path, "Always compare digit streams");
  count->add_option("--max-digits", cfg.max_digits, "Digit budget per membership test");
  add_output_options(count, cfg);

  auto* scan = app.add_subcommand("scan", "Ratios along the subsequence points");
  add_spec_options(scan, cfg, true);
  scan->add_option("--lo", cfg.lo, "Lower endpoint");
  scan->add_option("--hi", cfg.hi, "Upper endpoint");
  scan->add_option("--jmax", cfg.jmax, "Largest j for linear tails");
  scan->add_option("--Jmax", cfg.Jmax, "Largest J for polynomial tails");
  scan->add_flag("--no-fast-path", cfg.no_fast_path, "Always compare digit streams");
  add_output_options(scan, cfg);

  auto* disc = app.add_subcommand("discrepancy", "Discrepancy of tail values or log10 parts");
  add_spec_options(disc, cfg, false);
  disc->add_option("--N", cfg.N, "Number of indices or generated terms");
  disc->add_option("--alpha", cfg.alpha, "Lower end of the reference interval");
  disc->add_option("--beta", cfg.beta, "Upper end of the reference interval");
  disc->add_option("--gen", cfg.gen, "Generated integer sequence")
      ->check(CLI::IsMember({"naturals", "pow2", "poly"}));
  disc->add_option("--file", cfg.input, "Newline-delimited positive integers");
  add_output_options(disc, cfg);

  auto* benford = app.add_subcommand("benford", "Leading-digit census against Benford's law");
  benford->add_option("--gen", cfg.gen, "Generated integer sequence")
      ->check(CLI::IsMember({"naturals", "pow2", "poly"}));
  benford->add_option("--coeffs", cfg.coeffs, "Polynomial for --gen poly");
  benford->add_option("--N", cfg.N, "Number of generated terms");
  benford->add_option("--file", cfg.input, "Newline-delimited positive integers");
  add_output_options(benford, cfg);

  auto* limits = app.add_subcommand("limits", "Limit constants y_d and 2 y_d");
  limits->add_option("--dmax", cfg.dmax, "Largest degree");
  add_output_options(limits, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw DomainError("cannot write " + cfg.output);
      sink = &file;
    }
    if (tail->parsed()) return cmd_tail(cfg, *sink);
    if (count->parsed()) return cmd_count(cfg, *sink);
    if (scan->parsed()) return cmd_scan(cfg, *sink);
    if (disc->parsed()) return cmd_discrepancy(cfg, *sink);
    if (benford->parsed()) return cmd_benford(cfg, *sink);
    return cmd_limits(cfg, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UndecidedError& e) {
    err << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace concat_equidist::cli
