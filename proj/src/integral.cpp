#include "holder/integral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holder/compensated.hpp"
#include "holder/error.hpp"

namespace holder {

namespace {

constexpr int kPartitionSamples = 1001;
constexpr int kScaleSamples = 257;

void append_roots(const Expr& e, const Interval& interval, std::vector<double>& out) {
  const auto roots = find_sign_changes([&e](double x) { return e(x); }, interval);
  out.insert(out.end(), roots.begin(), roots.end());
}

// Kinks of |e|: zeros of e itself and of every abs() operand inside it.
void append_kinks(const Expr& e, const Interval& interval, bool include_self, std::vector<double>& out) {
  if (include_self) append_roots(e, interval, out);
  for (const Expr& arg : abs_arguments(e)) append_roots(arg, interval, out);
}

void normalize(std::vector<double>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// (∫ w |f|^s)^(1/s), with |f| divided by its sampled maximum before raising
// to the power so that large s stays inside double range.
double weighted_norm(const Expr& f, const Expr* weight, double s, const Interval& interval,
                     const QuadratureConfig& cfg) {
  std::vector<double> breaks;
  append_kinks(f, interval, true, breaks);
  if (weight != nullptr) append_kinks(*weight, interval, false, breaks);
  normalize(breaks);

  double scale = 0.0;
  for (int j = 0; j < kScaleSamples; ++j) scale = std::max(scale, std::abs(f(interval.grid_point(j, kScaleSamples))));
  for (double x : breaks) scale = std::max(scale, std::abs(f(x)));
  if (scale == 0.0) scale = 1.0;

  const auto integrand = [&](double x) {
    const double r = std::pow(std::abs(f(x)) / scale, s);
    return weight != nullptr ? (*weight)(x) * r : r;
  };
  const double integral = integrate_checked(integrand, interval, cfg, breaks).value;
  return scale * std::pow(std::max(integral, 0.0), 1.0 / s);
}

double holder_term(const Expr& f, const Expr& g, const Expr* weight, const ConjugateExponents& exps,
                   const Interval& interval, const QuadratureConfig& cfg) {
  return weighted_norm(f, weight, exps.p(), interval, cfg) * weighted_norm(g, weight, exps.q(), interval, cfg);
}

}  // namespace

WeightPartition::WeightPartition(std::vector<Expr> weights, Interval interval)
    : weights_(std::move(weights)), interval_(interval) {
  if (weights_.size() < 2) throw InvalidArgument("invalid partition: at least two weights are required");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!check_nonnegative(weights_[i], interval_, kPartitionSamples)) {
      throw InvalidArgument("invalid partition: weight " + std::to_string(i + 1) + " (" + to_string(weights_[i]) +
                            ") is negative on the interval");
    }
  }
  for (int j = 0; j < kPartitionSamples; ++j) {
    const double x = interval_.grid_point(j, kPartitionSamples);
    CompensatedSum sum;
    for (const Expr& w : weights_) sum += w(x);
    if (std::abs(sum.value() - 1.0) > 1e-10) {
      throw InvalidArgument("invalid partition: weights sum to " + std::to_string(sum.value()) + " at x = " +
                            std::to_string(x));
    }
  }
}

WeightPartition WeightPartition::linear(const Interval& interval) {
  const Expr x = Expr::variable();
  const Expr length = Expr::constant(interval.length());
  return WeightPartition({(Expr::constant(interval.b()) - x) / length, (x - Expr::constant(interval.a())) / length},
                         interval);
}

WeightPartition WeightPartition::trigonometric(const Interval& interval) {
  const Expr x = Expr::variable();
  const Expr two = Expr::constant(2.0);
  return WeightPartition({pow(apply(Op::sin, x), two), pow(apply(Op::cos, x), two)}, interval);
}

WeightPartition WeightPartition::degenerate(const Interval& interval, int count) {
  if (count < 2) throw InvalidArgument("invalid partition: at least two weights are required");
  std::vector<Expr> weights{Expr::constant(1.0)};
  for (int i = 1; i < count; ++i) weights.push_back(Expr::constant(0.0));
  return WeightPartition(std::move(weights), interval);
}

double lhs_integral(const Expr& f, const Expr& g, const Interval& interval, const QuadratureConfig& cfg) {
  std::vector<double> breaks;
  append_kinks(f, interval, true, breaks);
  append_kinks(g, interval, true, breaks);
  normalize(breaks);
  const auto integrand = [&](double x) { return std::abs(f(x) * g(x)); };
  return integrate_checked(integrand, interval, cfg, breaks).value;
}

double classical_bound(const Expr& f, const Expr& g, const ConjugateExponents& exps, const Interval& interval,
                       const QuadratureConfig& cfg) {
  return holder_term(f, g, nullptr, exps, interval, cfg);
}

RefinedBound refined_bound_weighted(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                                    const WeightPartition& partition, const QuadratureConfig& cfg) {
  RefinedBound out;
  CompensatedSum total;
  for (const Expr& w : partition.weights()) {
    const double term = holder_term(f, g, &w, exps, partition.interval(), cfg);
    out.terms.push_back(term);
    total += term;
  }
  out.total = total.value();
  return out;
}

RefinedBound refined_bound_linear(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                                  const Interval& interval, const QuadratureConfig& cfg) {
  return refined_bound_weighted(f, g, exps, WeightPartition::linear(interval), cfg);
}

double split_point_bound(const Expr& f, const Expr& g, const ConjugateExponents& exps, const Interval& interval,
                         double lambda, const QuadratureConfig& cfg) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("lambda must lie in [0, 1]");
  const double split = lambda * interval.b() + (1.0 - lambda) * interval.a();
  if (split <= interval.a() || split >= interval.b()) return classical_bound(f, g, exps, interval, cfg);
  return classical_bound(f, g, exps, Interval(interval.a(), split), cfg) +
         classical_bound(f, g, exps, Interval(split, interval.b()), cfg);
}

double default_report_tolerance(double classical) noexcept { return 1e-8 * std::max(1.0, classical); }

BoundChainReport verify_chain(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                              const WeightPartition& partition, const QuadratureConfig& cfg,
                              std::optional<double> report_tol) {
  const Interval& interval = partition.interval();
  const double lhs = lhs_integral(f, g, interval, cfg);
  const double classical = classical_bound(f, g, exps, interval, cfg);
  RefinedBound refined = refined_bound_weighted(f, g, exps, partition, cfg);
  const double tol = report_tol.value_or(default_report_tolerance(classical));
  if (!(tol >= 0.0)) throw InvalidArgument("report tolerance must be nonnegative");
  return make_chain_report(lhs, std::move(refined.terms), refined.total, classical, tol);
}

}  // namespace holder
