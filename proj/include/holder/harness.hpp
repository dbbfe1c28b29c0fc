#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "holder/exponents.hpp"
#include "holder/expr.hpp"
#include "holder/hermite_hadamard.hpp"
#include "holder/integral.hpp"
#include "holder/quadrature.hpp"
#include "holder/sum.hpp"

namespace holder {

using Json = nlohmann::ordered_json;

enum class Family { poly, exp_trig, mixed, tuples, hh };

std::string_view family_name(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// SplitMix64: a counter-based stream, fully determined by its seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

/// Independent stream for one trial of a sweep.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) noexcept;

inline constexpr int kSweepMaxSubdivisions = 1000;

struct SweepConfig {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  Family family = Family::mixed;
  /// p is drawn from (p_low, p_high]; both must lie in [1, 64].
  double p_low = 1.0;
  double p_high = 10.0;
  /// Tuple lengths for the tuples family, drawn log-uniformly.
  std::size_t n_low = 1;
  std::size_t n_high = 10000;
  /// Replaces the relative factor of the default report tolerance
  /// (1e-8 * max(1, bound) for integral/hh families, 1e-9 * bound for tuples).
  std::optional<double> tolerance_scale;
  /// Generated integrands oscillate over intervals up to length 20 and |g|^q
  /// is cusped at every zero of g, so sweeps get a larger bisection budget.
  QuadratureConfig quadrature{.max_subdivisions = kSweepMaxSubdivisions};

  void validate() const;
};

struct IntegralCase {
  Expr f;
  Expr g;
  ConjugateExponents exps;
  WeightPartition partition;
  std::string partition_kind;
};

struct TupleCase {
  PositiveTuple a;
  PositiveTuple b;
  ConjugateExponents exps;
  DiscreteWeightPartition partition;
  std::string partition_kind;
};

struct HHCase {
  HHInput input;
  std::string template_kind;
};

using Case = std::variant<IntegralCase, TupleCase, HHCase>;

/// Deterministic in the state of `rng`. Generated partitions are valid by
/// construction; hh cases use derivative-convex templates only.
Case generate_case(SplitMix64& rng, Family family, const SweepConfig& config);
/// The case a sweep runs as its trial `trial`.
Case generate_case(const SweepConfig& config, std::uint64_t trial);

Json case_to_json(const Case& c);
Json report_to_json(const ChainReport& r);
Json report_to_json(const HHReport& r);

/// Independent re-check of a chain report from its stored values. Returns
/// true when the ordering fails or a value is not finite, regardless of the
/// report's own chain_ok flag.
bool chain_violated(const ChainReport& r) noexcept;
bool hh_violated(const HHReport& r) noexcept;

enum class TrialStatus { ok, violation, error };

/// Per-trial values. For the hh family lhs/refined/classical carry the
/// defect, refined and Dragomir bounds.
struct TrialRecord {
  std::uint64_t trial = 0;
  TrialStatus status = TrialStatus::ok;
  std::string message;
  double lhs = 0.0;
  double refined = 0.0;
  double classical = 0.0;
  double gap_refined = 0.0;
  double gap_lhs = 0.0;
  std::optional<double> tightening_ratio;
  Json inputs;
  Json report;
};

/// Runs one generated case through its verify operation. Never throws for
/// case-level failures; they come back with status error.
TrialRecord run_trial(const SweepConfig& config, std::uint64_t trial);

struct Stats {
  std::size_t count = 0;
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
  double q05 = 0.0;
  double q25 = 0.0;
  double q50 = 0.0;
  double q75 = 0.0;
  double q95 = 0.0;
};

Stats summarize(std::vector<double> values);

struct SweepSummary {
  SweepConfig config;
  std::uint64_t trials_run = 0;
  /// Trial records in trial order.
  std::vector<TrialRecord> records;
  std::vector<std::uint64_t> violations;
  std::vector<std::uint64_t> errors;
  Stats gap_refined;
  Stats gap_lhs;
  Stats tightening_ratio;
};

/// Runs every trial; `threads` = 0 picks the hardware concurrency. The
/// summary is identical for any thread count.
SweepSummary run_sweep(const SweepConfig& config, unsigned threads = 1);

Json summary_to_json(const SweepSummary& summary);
/// One header line plus one row per trial.
std::string summary_to_csv(const SweepSummary& summary);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

std::string version_string();

}  // namespace holder
