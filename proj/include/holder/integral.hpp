#pragma once

#include <optional>
#include <vector>

#include "holder/exponents.hpp"
#include "holder/expr.hpp"
#include "holder/quadrature.hpp"

namespace holder {

/// n >= 2 nonnegative weight functions summing to 1 on an interval.
///
/// Both properties are checked by sampling 1001 uniform points: each weight
/// must pass check_nonnegative and the pointwise sum must equal 1 within 1e-10.
class WeightPartition {
 public:
  WeightPartition(std::vector<Expr> weights, Interval interval);

  /// ((b - x)/(b - a), (x - a)/(b - a)).
  static WeightPartition linear(const Interval& interval);
  /// (sin(x)^2, cos(x)^2).
  static WeightPartition trigonometric(const Interval& interval);
  /// (1, 0, ..., 0) with `count` weights.
  static WeightPartition degenerate(const Interval& interval, int count = 2);

  const std::vector<Expr>& weights() const noexcept { return weights_; }
  const Interval& interval() const noexcept { return interval_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<Expr> weights_;
  Interval interval_;
};

struct RefinedBound {
  std::vector<double> terms;
  double total = 0.0;
};

/// ∫|f g| over the interval.
double lhs_integral(const Expr& f, const Expr& g, const Interval& interval, const QuadratureConfig& cfg = {});

/// (∫|f|^p)^(1/p) (∫|g|^q)^(1/q).
double classical_bound(const Expr& f, const Expr& g, const ConjugateExponents& exps, const Interval& interval,
                       const QuadratureConfig& cfg = {});

/// term_i = (∫w_i|f|^p)^(1/p) (∫w_i|g|^q)^(1/q), total = Σ term_i.
RefinedBound refined_bound_weighted(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                                    const WeightPartition& partition, const QuadratureConfig& cfg = {});

/// refined_bound_weighted under WeightPartition::linear(interval).
RefinedBound refined_bound_linear(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                                  const Interval& interval, const QuadratureConfig& cfg = {});

/// Classical bound applied separately on [a, c] and [c, b] with
/// c = λb + (1-λ)a, λ ∈ [0, 1], and summed.
double split_point_bound(const Expr& f, const Expr& g, const ConjugateExponents& exps, const Interval& interval,
                         double lambda, const QuadratureConfig& cfg = {});

/// 1e-8 * max(1, classical).
double default_report_tolerance(double classical) noexcept;

/// Computes lhs, refined and classical values and checks their ordering.
/// Without `report_tol` the default hybrid tolerance is used.
BoundChainReport verify_chain(const Expr& f, const Expr& g, const ConjugateExponents& exps,
                              const WeightPartition& partition, const QuadratureConfig& cfg = {},
                              std::optional<double> report_tol = std::nullopt);

}  // namespace holder
