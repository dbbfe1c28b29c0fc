#include "holder/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "holder/compensated.hpp"
#include "holder/error.hpp"

#ifndef HOLDER_VERSION
#define HOLDER_VERSION "0.0.0"
#endif

namespace holder {

std::string version_string() { return std::string("holder ") + HOLDER_VERSION; }

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::poly: return "poly";
    case Family::exp_trig: return "exp-trig";
    case Family::mixed: return "mixed";
    case Family::tuples: return "tuples";
    case Family::hh: return "hh";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::poly, Family::exp_trig, Family::mixed, Family::tuples, Family::hh}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random streams

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t SplitMix64::integer(std::int64_t lo, std::int64_t hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return lo + static_cast<std::int64_t>(r % span);
}

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) noexcept {
  SplitMix64 mixer(seed);
  const std::uint64_t base = mixer.next();
  SplitMix64 trial_mixer(base ^ (trial * 0xD1B54A32D192ED03ULL));
  return SplitMix64(trial_mixer.next());
}

void SweepConfig::validate() const {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (!(p_low >= 1.0 && p_high <= kMaxExponent && p_low < p_high)) {
    throw InvalidArgument("p range must be a nonempty subrange of (1, 64]");
  }
  if (n_low < 1 || n_low > n_high) throw InvalidArgument("n range must be nonempty and start at 1 or above");
  if (tolerance_scale && !(*tolerance_scale > 0.0)) throw InvalidArgument("tolerance scale must be positive");
  quadrature.validate();
}

// ---------------------------------------------------------------------------
// Case generators

namespace {

const Expr kX = Expr::variable();

Expr num(double v) { return Expr::constant(v); }

// Rounded to 1e-3 so generated expressions stay readable.
double coefficient(SplitMix64& rng, double lo, double hi) { return std::round(rng.uniform(lo, hi) * 1000.0) / 1000.0; }

Expr random_poly(SplitMix64& rng) {
  const auto degree = rng.integer(0, 3);
  Expr e = num(coefficient(rng, -5.0, 5.0));
  for (std::int64_t k = 1; k <= degree; ++k) {
    const Expr power = k == 1 ? kX : pow(kX, num(static_cast<double>(k)));
    e = e + num(coefficient(rng, -5.0, 5.0)) * power;
  }
  return e;
}

Expr random_exp_trig_term(SplitMix64& rng) {
  const double amplitude = coefficient(rng, -5.0, 5.0);
  const double rate = coefficient(rng, -5.0, 5.0);
  switch (rng.integer(0, 2)) {
    case 0:
      return num(amplitude) * apply(Op::exp, num(rate) * kX);
    case 1:
      return num(amplitude) * apply(Op::sin, num(rate) * kX + num(coefficient(rng, -5.0, 5.0)));
    default:
      return num(amplitude) * apply(Op::cos, num(rate) * kX + num(coefficient(rng, -5.0, 5.0)));
  }
}

Expr random_exp_trig(SplitMix64& rng) {
  Expr e = random_exp_trig_term(rng);
  if (rng.integer(0, 1) == 1) e = e + random_exp_trig_term(rng);
  return e;
}

Expr random_mixed(SplitMix64& rng) {
  switch (rng.integer(0, 3)) {
    case 0: return random_poly(rng);
    case 1: return random_exp_trig(rng);
    case 2: return random_poly(rng) * random_exp_trig_term(rng);
    default: return apply(Op::abs, random_poly(rng)) + random_exp_trig_term(rng);
  }
}

Expr random_function(SplitMix64& rng, Family family) {
  switch (family) {
    case Family::poly: return random_poly(rng);
    case Family::exp_trig: return random_exp_trig(rng);
    default: return random_mixed(rng);
  }
}

Interval random_interval(SplitMix64& rng, double lo, double hi) {
  const double a = coefficient(rng, lo, hi - 0.1);
  double b = coefficient(rng, a + 0.1, hi);
  if (!(b > a)) b = a + 0.1;
  return Interval(a, b);
}

ConjugateExponents random_exponents(SplitMix64& rng, const SweepConfig& config) {
  // (0, 1] so that p > p_low strictly.
  const double u = 1.0 - rng.uniform();
  return ConjugateExponents::from_p(config.p_low + (config.p_high - config.p_low) * u);
}

// (|u| - |u - 1| + 1) / 2 clamps u to [0, 1] using only DSL primitives.
Expr clamp01(const Expr& u) {
  return (apply(Op::abs, u) - apply(Op::abs, u - num(1.0)) + num(1.0)) / num(2.0);
}

Expr random_clamped_weight(SplitMix64& rng, const Interval& iv) {
  const Expr unit = (kX - num(iv.a())) / num(iv.length());
  const Expr u = num(coefficient(rng, -0.5, 1.0)) + num(coefficient(rng, -2.0, 2.0)) * unit +
                 num(coefficient(rng, -0.5, 0.5)) * apply(Op::sin, num(coefficient(rng, -5.0, 5.0)) * kX);
  return clamp01(u);
}

Expr random_sin_squared(SplitMix64& rng) {
  if (rng.integer(0, 1) == 0) return pow(apply(Op::sin, kX), num(2.0));
  return pow(apply(Op::sin, num(coefficient(rng, -5.0, 5.0)) * kX + num(coefficient(rng, -5.0, 5.0))), num(2.0));
}

std::pair<WeightPartition, std::string> random_partition(SplitMix64& rng, const Interval& iv) {
  switch (rng.integer(0, 5)) {
    case 0:
      return {WeightPartition::linear(iv), "linear"};
    case 1: {
      const Expr s2 = random_sin_squared(rng);
      // cos^2 written as 1 - sin^2 of the same argument.
      return {WeightPartition({s2, num(1.0) - s2}, iv), "trig"};
    }
    case 2: {
      const auto m = rng.integer(2, 6);
      std::vector<Expr> weights(static_cast<std::size_t>(m), num(1.0 / static_cast<double>(m)));
      return {WeightPartition(std::move(weights), iv), "uniform"};
    }
    case 3: {
      const Expr w = random_clamped_weight(rng, iv);
      return {WeightPartition({w, num(1.0) - w}, iv), "clamped"};
    }
    case 4: {
      const Expr w1 = random_clamped_weight(rng, iv);
      const Expr w2 = random_sin_squared(rng);
      return {WeightPartition({w1 * w2, w1 * (num(1.0) - w2), num(1.0) - w1}, iv), "nested"};
    }
    default:
      return {WeightPartition::degenerate(iv), "degenerate"};
  }
}

std::vector<double> random_tuple(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  const double lo = std::log(1e-3);
  const double hi = std::log(1e3);
  for (double& x : v) x = std::exp(rng.uniform(lo, hi));
  return v;
}

std::pair<DiscreteWeightPartition, std::string> random_discrete_partition(SplitMix64& rng, std::size_t n) {
  switch (rng.integer(0, 3)) {
    case 0:
      return {DiscreteWeightPartition::linear(n), "linear"};
    case 1:
      return {DiscreteWeightPartition::trigonometric(n), "trig"};
    case 2: {
      const auto m = static_cast<std::size_t>(rng.integer(2, 8));
      std::vector<std::vector<double>> rows(m, std::vector<double>(n));
      for (std::size_t k = 0; k < n; ++k) {
        CompensatedSum column;
        for (auto& row : rows) {
          row[k] = 1.0 - rng.uniform();
          column += row[k];
        }
        const double total = column.value();
        for (auto& row : rows) row[k] /= total;
      }
      return {DiscreteWeightPartition(std::move(rows)), "random"};
    }
    default:
      return {DiscreteWeightPartition::degenerate(n), "degenerate"};
  }
}

HHCase random_hh_case(SplitMix64& rng, const SweepConfig& config) {
  const Interval iv = random_interval(rng, -2.0, 2.0);
  const ConjugateExponents exps = random_exponents(rng, config);
  const double scale = coefficient(rng, 0.1, 5.0);
  const double shift = coefficient(rng, -5.0, 5.0);
  const double rate = std::max(0.001, coefficient(rng, 0.0, 3.0));
  const Expr s = num(scale);
  const Expr c = num(rate);
  switch (rng.integer(0, 2)) {
    case 0: {
      const auto m = rng.integer(1, 3);
      const Expr f = s * pow(kX, num(static_cast<double>(2 * m))) + num(shift);
      const Expr fp = s * num(static_cast<double>(2 * m)) * pow(kX, num(static_cast<double>(2 * m - 1)));
      return {HHInput(f, fp, iv, exps), "even-power"};
    }
    case 1: {
      const Expr f = s * apply(Op::exp, c * kX) + num(shift);
      const Expr fp = s * c * apply(Op::exp, c * kX);
      return {HHInput(f, fp, iv, exps), "exp"};
    }
    default: {
      const Expr up = apply(Op::exp, c * kX);
      const Expr down = apply(Op::exp, -(c * kX));
      const Expr f = s * (up + down) / num(2.0) + num(shift);
      const Expr fp = s * c * (up - down) / num(2.0);
      return {HHInput(f, fp, iv, exps), "cosh"};
    }
  }
}

std::size_t random_length(SplitMix64& rng, const SweepConfig& config) {
  const double lo = std::log(static_cast<double>(config.n_low));
  const double hi = std::log(static_cast<double>(config.n_high) + 1.0);
  const auto n = static_cast<std::size_t>(std::floor(std::exp(rng.uniform(lo, hi))));
  return std::clamp(n, config.n_low, config.n_high);
}

}  // namespace

Case generate_case(SplitMix64& rng, Family family, const SweepConfig& config) {
  switch (family) {
    case Family::tuples: {
      const std::size_t n = random_length(rng, config);
      const ConjugateExponents exps = random_exponents(rng, config);
      PositiveTuple a(random_tuple(rng, n));
      PositiveTuple b(random_tuple(rng, n));
      auto [partition, kind] = random_discrete_partition(rng, n);
      return TupleCase{std::move(a), std::move(b), exps, std::move(partition), std::move(kind)};
    }
    case Family::hh:
      return random_hh_case(rng, config);
    default: {
      const Interval iv = random_interval(rng, -10.0, 10.0);
      const ConjugateExponents exps = random_exponents(rng, config);
      Expr f = random_function(rng, family);
      Expr g = random_function(rng, family);
      auto [partition, kind] = random_partition(rng, iv);
      return IntegralCase{std::move(f), std::move(g), exps, std::move(partition), std::move(kind)};
    }
  }
}

Case generate_case(const SweepConfig& config, std::uint64_t trial) {
  SplitMix64 rng = trial_stream(config.seed, trial);
  return generate_case(rng, config.family, config);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json numbers(std::span<const double> values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

Json exps_json(const ConjugateExponents& e) { return Json{{"p", number(e.p())}, {"q", number(e.q())}}; }

}  // namespace

Json case_to_json(const Case& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegralCase>) {
          Json weights = Json::array();
          for (const Expr& w : v.partition.weights()) weights.push_back(to_string(w));
          return Json{{"kind", "integral"},
                      {"f", to_string(v.f)},
                      {"g", to_string(v.g)},
                      {"a", number(v.partition.interval().a())},
                      {"b", number(v.partition.interval().b())},
                      {"exponents", exps_json(v.exps)},
                      {"partition", v.partition_kind},
                      {"weights", std::move(weights)}};
        } else if constexpr (std::is_same_v<T, TupleCase>) {
          Json rows = Json::array();
          for (const auto& row : v.partition.rows()) rows.push_back(numbers(row));
          return Json{{"kind", "tuples"},
                      {"n", v.a.size()},
                      {"a", numbers(v.a.values())},
                      {"b", numbers(v.b.values())},
                      {"exponents", exps_json(v.exps)},
                      {"partition", v.partition_kind},
                      {"rows", std::move(rows)}};
        } else {
          return Json{{"kind", "hh"},
                      {"template", v.template_kind},
                      {"f", to_string(v.input.f())},
                      {"fprime", to_string(v.input.f_prime())},
                      {"a", number(v.input.interval().a())},
                      {"b", number(v.input.interval().b())},
                      {"exponents", exps_json(v.input.exps())}};
        }
      },
      c);
}

Json report_to_json(const ChainReport& r) {
  return Json{{"lhs", number(r.lhs)},
              {"refined_terms", numbers(r.refined_terms)},
              {"refined_total", number(r.refined_total)},
              {"classical", number(r.classical)},
              {"gap_refined", number(r.gap_refined)},
              {"gap_lhs", number(r.gap_lhs)},
              {"chain_ok", r.chain_ok},
              {"tolerance", number(r.tolerance)}};
}

Json report_to_json(const HHReport& r) {
  return Json{{"defect", number(r.defect)},
              {"dragomir", number(r.dragomir)},
              {"refined", number(r.refined)},
              {"convexity_ok", r.convexity_ok},
              {"ordering_ok", r.ordering_ok},
              {"bound_ok", r.bound_ok},
              {"tolerance", number(r.tolerance)},
              {"moment_closed_form", number(r.moment_closed_form)},
              {"moment_quadrature", number(r.moment_quadrature)}};
}

bool chain_violated(const ChainReport& r) noexcept {
  const std::array<double, 4> values{r.lhs, r.refined_total, r.classical, r.tolerance};
  for (double v : values) {
    if (!std::isfinite(v)) return true;
  }
  if (r.classical == 0.0) return !(r.lhs <= r.tolerance && r.refined_total <= r.tolerance);
  return r.lhs > r.refined_total + r.tolerance || r.refined_total > r.classical + r.tolerance;
}

bool hh_violated(const HHReport& r) noexcept {
  if (!std::isfinite(r.defect) || !std::isfinite(r.refined) || !std::isfinite(r.dragomir)) return true;
  if (r.refined > r.dragomir + r.tolerance) return true;
  return r.convexity_ok && r.defect > r.refined + r.tolerance;
}

// ---------------------------------------------------------------------------
// Sweeps

TrialRecord run_trial(const SweepConfig& config, std::uint64_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  try {
    const Case c = generate_case(config, trial);
    rec.inputs = case_to_json(c);
    if (const auto* ic = std::get_if<IntegralCase>(&c)) {
      ChainReport r = verify_chain(ic->f, ic->g, ic->exps, ic->partition, config.quadrature);
      if (config.tolerance_scale) {
        r = make_chain_report(r.lhs, std::move(r.refined_terms), r.refined_total, r.classical,
                              *config.tolerance_scale * std::max(1.0, r.classical));
      }
      rec.lhs = r.lhs;
      rec.refined = r.refined_total;
      rec.classical = r.classical;
      rec.gap_refined = r.gap_refined;
      rec.gap_lhs = r.gap_lhs;
      if (r.classical > 0.0) rec.tightening_ratio = r.gap_refined / r.classical;
      rec.status = (!r.chain_ok || chain_violated(r)) ? TrialStatus::violation : TrialStatus::ok;
      rec.report = report_to_json(r);
    } else if (const auto* tc = std::get_if<TupleCase>(&c)) {
      ChainReport r = verify_sum_chain(tc->a, tc->b, tc->exps, tc->partition);
      if (config.tolerance_scale) {
        r = make_chain_report(r.lhs, std::move(r.refined_terms), r.refined_total, r.classical,
                              *config.tolerance_scale * r.classical);
      }
      rec.lhs = r.lhs;
      rec.refined = r.refined_total;
      rec.classical = r.classical;
      rec.gap_refined = r.gap_refined;
      rec.gap_lhs = r.gap_lhs;
      if (r.classical > 0.0) rec.tightening_ratio = r.gap_refined / r.classical;
      rec.status = (!r.chain_ok || chain_violated(r)) ? TrialStatus::violation : TrialStatus::ok;
      rec.report = report_to_json(r);
    } else {
      const auto& hc = std::get<HHCase>(c);
      HHReport r = hh_report(hc.input, config.quadrature);
      if (config.tolerance_scale) {
        r.tolerance = *config.tolerance_scale * std::max(1.0, r.dragomir);
        r.ordering_ok = r.refined <= r.dragomir + r.tolerance;
        r.bound_ok = r.defect <= r.refined + r.tolerance;
      }
      rec.lhs = r.defect;
      rec.refined = r.refined;
      rec.classical = r.dragomir;
      rec.gap_refined = r.dragomir - r.refined;
      rec.gap_lhs = r.refined - r.defect;
      if (r.dragomir > 0.0) rec.tightening_ratio = rec.gap_refined / r.dragomir;
      const bool flagged = !r.ordering_ok || (r.convexity_ok && !r.bound_ok);
      rec.status = (flagged || hh_violated(r)) ? TrialStatus::violation : TrialStatus::ok;
      rec.report = report_to_json(r);
    }
  } catch (const std::exception& e) {
    rec.status = TrialStatus::error;
    rec.message = e.what();
  }
  return rec;
}

Stats summarize(std::vector<double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  CompensatedSum total;
  for (double v : values) total += v;
  std::sort(values.begin(), values.end());
  const auto quantile = [&values](double prob) {
    const double pos = prob * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  s.min = values.front();
  s.max = values.back();
  s.mean = total.value() / static_cast<double>(values.size());
  s.q05 = quantile(0.05);
  s.q25 = quantile(0.25);
  s.q50 = quantile(0.50);
  s.q75 = quantile(0.75);
  s.q95 = quantile(0.95);
  return s;
}

SweepSummary run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.trials));

  SweepSummary summary;
  summary.config = config;
  summary.records.resize(config.trials);

  std::atomic<std::uint64_t> next{0};
  const auto worker = [&]() {
    for (std::uint64_t i = next.fetch_add(1); i < config.trials; i = next.fetch_add(1)) {
      summary.records[i] = run_trial(config, i);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<double> gap_refined;
  std::vector<double> gap_lhs;
  std::vector<double> tightening;
  for (const TrialRecord& rec : summary.records) {
    ++summary.trials_run;
    if (rec.status == TrialStatus::error) {
      summary.errors.push_back(rec.trial);
      continue;
    }
    if (rec.status == TrialStatus::violation) summary.violations.push_back(rec.trial);
    gap_refined.push_back(rec.gap_refined);
    gap_lhs.push_back(rec.gap_lhs);
    if (rec.tightening_ratio) tightening.push_back(*rec.tightening_ratio);
  }
  summary.gap_refined = summarize(std::move(gap_refined));
  summary.gap_lhs = summarize(std::move(gap_lhs));
  summary.tightening_ratio = summarize(std::move(tightening));
  return summary;
}

namespace {

const char* status_name(TrialStatus s) {
  switch (s) {
    case TrialStatus::ok: return "ok";
    case TrialStatus::violation: return "violation";
    case TrialStatus::error: return "error";
  }
  return "unknown";
}

Json stats_json(const Stats& s) {
  if (s.count == 0) return Json{{"count", 0}};
  return Json{{"count", s.count},   {"min", number(s.min)}, {"mean", number(s.mean)},
              {"max", number(s.max)}, {"q05", number(s.q05)}, {"q25", number(s.q25)},
              {"q50", number(s.q50)}, {"q75", number(s.q75)}, {"q95", number(s.q95)}};
}

}  // namespace

Json summary_to_json(const SweepSummary& summary) {
  const SweepConfig& cfg = summary.config;
  Json inputs{{"trials", cfg.trials},
              {"seed", cfg.seed},
              {"family", family_name(cfg.family)},
              {"p_range", Json::array({number(cfg.p_low), number(cfg.p_high)})},
              {"n_range", Json::array({cfg.n_low, cfg.n_high})},
              {"tolerance_scale", cfg.tolerance_scale ? number(*cfg.tolerance_scale) : Json(nullptr)},
              {"quadrature",
               {{"rel_tol", number(cfg.quadrature.rel_tol)},
                {"abs_tol", number(cfg.quadrature.abs_tol)},
                {"max_subdivisions", cfg.quadrature.max_subdivisions}}}};

  Json violations = Json::array();
  Json errors = Json::array();
  Json trials = Json::array();
  for (const TrialRecord& rec : summary.records) {
    Json row{{"trial", rec.trial}, {"status", status_name(rec.status)}};
    if (rec.status == TrialStatus::error) {
      row["message"] = rec.message;
      errors.push_back(Json{{"trial", rec.trial}, {"message", rec.message}, {"inputs", rec.inputs}});
    } else {
      row["lhs"] = number(rec.lhs);
      row["refined"] = number(rec.refined);
      row["classical"] = number(rec.classical);
      row["gap_refined"] = number(rec.gap_refined);
      row["gap_lhs"] = number(rec.gap_lhs);
      row["tightening_ratio"] = rec.tightening_ratio ? number(*rec.tightening_ratio) : Json(nullptr);
      row["report"] = rec.report;
      if (rec.status == TrialStatus::violation) {
        violations.push_back(Json{{"trial", rec.trial}, {"inputs", rec.inputs}, {"report", rec.report}});
      }
    }
    trials.push_back(std::move(row));
  }

  Json results{{"trials_run", summary.trials_run},
               {"violation_count", summary.violations.size()},
               {"error_count", summary.errors.size()},
               {"violations", std::move(violations)},
               {"errors", std::move(errors)},
               {"gap_refined", stats_json(summary.gap_refined)},
               {"gap_lhs", stats_json(summary.gap_lhs)},
               {"tightening_ratio", stats_json(summary.tightening_ratio)},
               {"trials", std::move(trials)}};

  return Json{{"mode", "sweep"}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
              {"version", version_string()}};
}

std::string summary_to_csv(const SweepSummary& summary) {
  std::ostringstream os;
  os << "trial,status,lhs,refined,classical,gap_refined,gap_lhs,tightening_ratio\n";
  for (const TrialRecord& rec : summary.records) {
    os << rec.trial << ',' << status_name(rec.status);
    if (rec.status == TrialStatus::error) {
      os << ",,,,,,\n";
      continue;
    }
    os << ',' << format_double(rec.lhs) << ',' << format_double(rec.refined) << ',' << format_double(rec.classical)
       << ',' << format_double(rec.gap_refined) << ',' << format_double(rec.gap_lhs) << ','
       << (rec.tightening_ratio ? format_double(*rec.tightening_ratio) : std::string()) << '\n';
  }
  return os.str();
}

}  // namespace holder
