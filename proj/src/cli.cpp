#include "holder/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "holder/error.hpp"
#include "holder/harness.hpp"
#include "holder/hermite_hadamard.hpp"
#include "holder/integral.hpp"
#include "holder/sum.hpp"

namespace holder {

namespace {

struct OutputFormat {
  bool json = false;
  bool csv = false;
};

double parse_real(std::string_view text, const std::string& what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("malformed number '" + std::string(text) + "' in " + what);
  }
  return v;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

// A tuple argument is either a path to a file (newline- or comma-separated
// values, '#' comments) or an inline comma-separated list.
std::vector<double> read_values(const std::string& arg, const std::string& what) {
  std::vector<double> out;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw InvalidArgument("cannot read " + arg);
    std::string line;
    while (std::getline(in, line)) {
      for (const std::string& field : split(strip_comment(line), ',')) {
        if (!blank(field)) out.push_back(parse_real(field, what));
      }
    }
  } else {
    for (const std::string& field : split(arg, ',')) out.push_back(parse_real(field, what));
  }
  if (out.empty()) throw InvalidArgument(what + " has no values");
  return out;
}

// One partition row per non-blank line.
std::vector<std::vector<double>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read weights file " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const std::string content = strip_comment(line);
    if (blank(content)) continue;
    std::vector<double> row;
    for (const std::string& field : split(content, ',')) row.push_back(parse_real(field, "weights file"));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<double> report_tolerance(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag >= 0.0)) throw InvalidArgument("--tol must be nonnegative");
    return flag;
  }
  if (const char* env = std::getenv("HOLDER_TOL"); env != nullptr && *env != '\0') {
    const double v = parse_real(env, "HOLDER_TOL");
    if (!(v >= 0.0)) throw InvalidArgument("HOLDER_TOL must be nonnegative");
    return v;
  }
  return std::nullopt;
}

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(std::isfinite(x) ? Json(x) : Json(nullptr));
  return out;
}

Json record(const char* mode, Json inputs, Json results) {
  return Json{{"mode", mode}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
              {"version", version_string()}};
}

void print_row(std::ostream& out, const std::string& label, const std::string& value) {
  out << std::left << std::setw(18) << label << value << '\n';
}

void print_chain(std::ostream& out, const ChainReport& r) {
  print_row(out, "lhs", format_double(r.lhs));
  for (std::size_t i = 0; i < r.refined_terms.size(); ++i) {
    print_row(out, "refined[" + std::to_string(i + 1) + "]", format_double(r.refined_terms[i]));
  }
  print_row(out, "refined_total", format_double(r.refined_total));
  print_row(out, "classical", format_double(r.classical));
  print_row(out, "gap_refined", format_double(r.gap_refined));
  print_row(out, "gap_lhs", format_double(r.gap_lhs));
  print_row(out, "tolerance", format_double(r.tolerance));
  print_row(out, "chain", r.chain_ok ? "ok (lhs <= refined <= classical)" : "VIOLATED");
}

void print_chain_csv(std::ostream& out, const ChainReport& r) {
  out << "lhs,refined_total,classical,gap_refined,gap_lhs,chain_ok,tolerance";
  for (std::size_t i = 0; i < r.refined_terms.size(); ++i) out << ",term_" << i + 1;
  out << '\n';
  out << format_double(r.lhs) << ',' << format_double(r.refined_total) << ',' << format_double(r.classical) << ','
      << format_double(r.gap_refined) << ',' << format_double(r.gap_lhs) << ',' << (r.chain_ok ? "true" : "false")
      << ',' << format_double(r.tolerance);
  for (double t : r.refined_terms) out << ',' << format_double(t);
  out << '\n';
}

// ---------------------------------------------------------------------------

struct IntegralArgs {
  std::string f;
  std::string g;
  double a = 0.0;
  double b = 1.0;
  double p = 2.0;
  std::string weights;
  bool linear = false;
  bool trig = false;
  std::optional<double> lambda;
  std::optional<double> tol;
  int max_subdivisions = QuadratureConfig{}.max_subdivisions;
  OutputFormat format;
};

int cmd_integral(const IntegralArgs& args, std::ostream& out) {
  const Expr f = parse(args.f);
  const Expr g = parse(args.g);
  const Interval iv(args.a, args.b);
  const ConjugateExponents exps = ConjugateExponents::from_p(args.p);
  QuadratureConfig cfg;
  cfg.max_subdivisions = args.max_subdivisions;

  std::string kind = "linear";
  std::optional<WeightPartition> partition;
  if (!args.weights.empty()) {
    std::vector<Expr> ws;
    for (const std::string& w : split(args.weights, ',')) ws.push_back(parse(w));
    partition.emplace(std::move(ws), iv);
    kind = "custom";
  } else if (args.trig) {
    partition = WeightPartition::trigonometric(iv);
    kind = "trig";
  } else {
    partition = WeightPartition::linear(iv);
  }

  const ChainReport r = verify_chain(f, g, exps, *partition, cfg, report_tolerance(args.tol));
  std::optional<double> split;
  if (args.lambda) split = split_point_bound(f, g, exps, iv, *args.lambda, cfg);

  if (args.format.json) {
    Json weights = Json::array();
    for (const Expr& w : partition->weights()) weights.push_back(to_string(w));
    Json inputs{{"f", args.f},
                {"g", args.g},
                {"a", args.a},
                {"b", args.b},
                {"p", args.p},
                {"partition", kind},
                {"weights", std::move(weights)},
                {"lambda", args.lambda ? Json(*args.lambda) : Json(nullptr)},
                {"tol", args.tol ? Json(*args.tol) : Json(nullptr)}};
    Json results{{"exponents", {{"p", exps.p()}, {"q", exps.q()}}},
                 {"lhs", r.lhs},
                 {"refined_terms", numbers(r.refined_terms)},
                 {"refined_total", r.refined_total},
                 {"classical", r.classical},
                 {"gap_refined", r.gap_refined},
                 {"gap_lhs", r.gap_lhs},
                 {"chain_ok", r.chain_ok},
                 {"tolerance", r.tolerance}};
    if (split) results["split_point"] = *split;
    out << record("integral", std::move(inputs), std::move(results)).dump(2) << '\n';
  } else if (args.format.csv) {
    print_chain_csv(out, r);
  } else {
    print_row(out, "mode", "integral");
    print_row(out, "partition", kind);
    print_row(out, "p, q", format_double(exps.p()) + ", " + format_double(exps.q()));
    print_chain(out, r);
    if (split) print_row(out, "split_point", format_double(*split));
  }
  return r.chain_ok ? kExitOk : kExitViolation;
}

struct SumArgs {
  std::string a;
  std::string b;
  double p = 2.0;
  std::string weights;
  bool linear = false;
  bool trig = false;
  std::optional<double> tol;
  OutputFormat format;
};

int cmd_sum(const SumArgs& args, std::ostream& out) {
  const PositiveTuple a(read_values(args.a, "--a"));
  const PositiveTuple b(read_values(args.b, "--b"));
  if (a.size() != b.size()) {
    throw InvalidArgument("length mismatch: --a has " + std::to_string(a.size()) + " values, --b has " +
                          std::to_string(b.size()));
  }
  const ConjugateExponents exps = ConjugateExponents::from_p(args.p);

  std::string kind = "linear";
  std::optional<DiscreteWeightPartition> partition;
  if (!args.weights.empty()) {
    partition.emplace(read_rows(args.weights));
    kind = "custom";
  } else if (args.trig) {
    partition = DiscreteWeightPartition::trigonometric(a.size());
    kind = "trig";
  } else {
    partition = DiscreteWeightPartition::linear(a.size());
  }

  const ChainReport r = verify_sum_chain(a, b, exps, *partition, report_tolerance(args.tol));

  if (args.format.json) {
    Json inputs{{"a", args.a},      {"b", args.b},        {"p", args.p},
                {"partition", kind}, {"weights", args.weights.empty() ? Json(nullptr) : Json(args.weights)},
                {"tol", args.tol ? Json(*args.tol) : Json(nullptr)}};
    Json results{{"exponents", {{"p", exps.p()}, {"q", exps.q()}}},
                 {"n", a.size()},
                 {"lhs", r.lhs},
                 {"refined_terms", numbers(r.refined_terms)},
                 {"refined_total", r.refined_total},
                 {"classical", r.classical},
                 {"gap_refined", r.gap_refined},
                 {"gap_lhs", r.gap_lhs},
                 {"chain_ok", r.chain_ok},
                 {"tolerance", r.tolerance}};
    out << record("sum", std::move(inputs), std::move(results)).dump(2) << '\n';
  } else if (args.format.csv) {
    print_chain_csv(out, r);
  } else {
    print_row(out, "mode", "sum");
    print_row(out, "n", std::to_string(a.size()));
    print_row(out, "partition", kind);
    print_row(out, "p, q", format_double(exps.p()) + ", " + format_double(exps.q()));
    print_chain(out, r);
  }
  return r.chain_ok ? kExitOk : kExitViolation;
}

struct HHArgs {
  std::string f;
  std::string fprime;
  double a = 0.0;
  double b = 1.0;
  double p = 2.0;
  std::optional<double> tol;
  OutputFormat format;
};

int cmd_hh(const HHArgs& args, std::ostream& out) {
  const HHInput input(parse(args.f), parse(args.fprime), Interval(args.a, args.b),
                      ConjugateExponents::from_p(args.p));
  const HHReport r = hh_report(input, QuadratureConfig{}, report_tolerance(args.tol));
  const bool ok = r.ordering_ok && (!r.convexity_ok || r.bound_ok);

  if (args.format.json) {
    Json inputs{{"f", args.f}, {"fprime", args.fprime}, {"a", args.a}, {"b", args.b}, {"p", args.p},
                {"tol", args.tol ? Json(*args.tol) : Json(nullptr)}};
    Json results = report_to_json(r);
    results["exponents"] = {{"p", input.exps().p()}, {"q", input.exps().q()}};
    out << record("hh", std::move(inputs), std::move(results)).dump(2) << '\n';
  } else if (args.format.csv) {
    out << "defect,dragomir,refined,convexity_ok,ordering_ok,bound_ok,tolerance\n"
        << format_double(r.defect) << ',' << format_double(r.dragomir) << ',' << format_double(r.refined) << ','
        << (r.convexity_ok ? "true" : "false") << ',' << (r.ordering_ok ? "true" : "false") << ','
        << (r.bound_ok ? "true" : "false") << ',' << format_double(r.tolerance) << '\n';
  } else {
    print_row(out, "mode", "hh");
    print_row(out, "defect", format_double(r.defect));
    print_row(out, "dragomir", format_double(r.dragomir));
    print_row(out, "refined", format_double(r.refined));
    print_row(out, "convexity_ok", r.convexity_ok ? "true" : "false (hypothesis unverified)");
    print_row(out, "ordering_ok", r.ordering_ok ? "true" : "false");
    print_row(out, "bound_ok", r.bound_ok ? "true" : "false");
  }
  return ok ? kExitOk : kExitViolation;
}

struct SweepArgs {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string family = "mixed";
  std::string out_path;
  std::string csv_path;
  unsigned threads = 1;
  double p_min = 1.0;
  double p_max = 10.0;
  std::size_t n_min = 1;
  std::size_t n_max = 10000;
  std::optional<double> tol_scale;
  int max_subdivisions = kSweepMaxSubdivisions;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidArgument("cannot write " + path);
  os << content;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  const auto family = parse_family(args.family);
  if (!family) throw InvalidArgument("unknown family '" + args.family + "' (poly, exp-trig, mixed, tuples, hh)");
  SweepConfig cfg;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.family = *family;
  cfg.p_low = args.p_min;
  cfg.p_high = args.p_max;
  cfg.n_low = args.n_min;
  cfg.n_high = args.n_max;
  cfg.tolerance_scale = args.tol_scale;
  cfg.quadrature.max_subdivisions = args.max_subdivisions;
  cfg.validate();

  const SweepSummary summary = run_sweep(cfg, args.threads);
  const std::string json = summary_to_json(summary).dump(2) + "\n";
  if (!args.csv_path.empty()) write_file(args.csv_path, summary_to_csv(summary));
  if (args.out_path.empty()) {
    out << json;
  } else {
    write_file(args.out_path, json);
    print_row(out, "family", std::string(family_name(cfg.family)));
    print_row(out, "trials_run", std::to_string(summary.trials_run));
    print_row(out, "violations", std::to_string(summary.violations.size()));
    print_row(out, "errors", std::to_string(summary.errors.size()));
    if (summary.tightening_ratio.count > 0) {
      print_row(out, "tightening mean", format_double(summary.tightening_ratio.mean));
      print_row(out, "tightening max", format_double(summary.tightening_ratio.max));
    }
    print_row(out, "summary", args.out_path);
  }
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

void add_format_flags(CLI::App* cmd, OutputFormat& format) {
  auto* json = cmd->add_flag("--json", format.json, "Emit a JSON record");
  auto* csv = cmd->add_flag("--csv", format.csv, "Emit CSV (header plus one row)");
  json->excludes(csv);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hölder-type bounds: classical, refined and Hermite-Hadamard estimates", "holder"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version_string());

  IntegralArgs integral;
  auto* ci = app.add_subcommand("integral", "Integral Hölder chain: lhs <= refined <= classical");
  ci->add_option("--f", integral.f, "f(x)")->required();
  ci->add_option("--g", integral.g, "g(x)")->required();
  ci->add_option("--a", integral.a, "Left endpoint")->required();
  ci->add_option("--b", integral.b, "Right endpoint")->required();
  ci->add_option("--p", integral.p, "Exponent p > 1 (q is its conjugate)")->required();
  auto* weights = ci->add_option("--weights", integral.weights, "Comma-separated weight expressions");
  auto* linear = ci->add_flag("--linear", integral.linear, "Weights (b-x)/(b-a), (x-a)/(b-a) (default)");
  auto* trig = ci->add_flag("--trig", integral.trig, "Weights sin(x)^2, cos(x)^2");
  weights->excludes(linear)->excludes(trig);
  linear->excludes(trig);
  ci->add_option("--lambda", integral.lambda, "Also report the split-point bound at this lambda in [0, 1]");
  ci->add_option("--tol", integral.tol, "Absolute report tolerance");
  ci->add_option("--max-subdivisions", integral.max_subdivisions, "Quadrature bisection budget");
  add_format_flags(ci, integral.format);

  SumArgs sum;
  auto* cs = app.add_subcommand("sum", "Sum Hölder chain for positive tuples");
  cs->add_option("--a", sum.a, "CSV file or inline comma-separated list")->required();
  cs->add_option("--b", sum.b, "CSV file or inline comma-separated list")->required();
  cs->add_option("--p", sum.p, "Exponent p > 1")->required();
  auto* sweights = cs->add_option("--weights", sum.weights, "CSV file, one partition row per line");
  auto* slinear = cs->add_flag("--linear", sum.linear, "Rows k/n, (n-k)/n (default)");
  auto* strig = cs->add_flag("--trig", sum.trig, "Rows sin^2 k, cos^2 k");
  sweights->excludes(slinear)->excludes(strig);
  slinear->excludes(strig);
  cs->add_option("--tol", sum.tol, "Absolute report tolerance");
  add_format_flags(cs, sum.format);

  HHArgs hh;
  auto* ch = app.add_subcommand("hh", "Trapezoid defect against the Dragomir and refined bounds");
  ch->add_option("--f", hh.f, "f(x)")->required();
  ch->add_option("--fprime", hh.fprime, "f'(x), supplied explicitly")->required();
  ch->add_option("--a", hh.a, "Left endpoint")->required();
  ch->add_option("--b", hh.b, "Right endpoint")->required();
  ch->add_option("--p", hh.p, "Exponent p > 1")->required();
  ch->add_option("--tol", hh.tol, "Absolute report tolerance");
  add_format_flags(ch, hh.format);

  SweepArgs sweep;
  auto* cw = app.add_subcommand("sweep", "Randomized chain verification");
  cw->add_option("--trials", sweep.trials, "Number of trials (>= 1)")->required();
  cw->add_option("--seed", sweep.seed, "64-bit seed")->required();
  cw->add_option("--family", sweep.family, "poly | exp-trig | mixed | tuples | hh")->required();
  cw->add_option("--out", sweep.out_path, "Write the JSON summary here instead of stdout");
  cw->add_option("--csv", sweep.csv_path, "Also write one CSV row per trial here");
  cw->add_option("--threads", sweep.threads, "Worker threads, 0 = all cores; output does not depend on it");
  cw->add_option("--p-min", sweep.p_min, "p is drawn from (p-min, p-max]");
  cw->add_option("--p-max", sweep.p_max);
  cw->add_option("--n-min", sweep.n_min, "Tuple lengths for the tuples family");
  cw->add_option("--n-max", sweep.n_max);
  cw->add_option("--tol-scale", sweep.tol_scale, "Relative factor of the report tolerance");
  cw->add_option("--max-subdivisions", sweep.max_subdivisions, "Quadrature bisection budget per integral");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version_string() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (ci->parsed()) return cmd_integral(integral, out);
    if (cs->parsed()) return cmd_sum(sum, out);
    if (ch->parsed()) return cmd_hh(hh, out);
    return cmd_sweep(sweep, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace holder
