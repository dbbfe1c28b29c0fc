#pragma once

#include <optional>
#include <span>
#include <vector>

#include "holder/exponents.hpp"

namespace holder {

/// n >= 1 strictly positive, finite entries.
class PositiveTuple {
 public:
  explicit PositiveTuple(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  std::vector<double> values_;
};

/// m >= 2 rows of n nonnegative weights; every column sums to 1 within 1e-12.
class DiscreteWeightPartition {
 public:
  explicit DiscreteWeightPartition(std::vector<std::vector<double>> rows);

  /// Rows (k/n) and ((n-k)/n) for k = 1..n.
  static DiscreteWeightPartition linear(std::size_t n);
  /// Rows (sin^2 k) and (cos^2 k) for k = 1..n.
  static DiscreteWeightPartition trigonometric(std::size_t n);
  /// (1, ..., 1) followed by m - 1 zero rows.
  static DiscreteWeightPartition degenerate(std::size_t n, std::size_t m = 2);

  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return rows_.front().size(); }

 private:
  std::vector<std::vector<double>> rows_;
};

struct RefinedSum {
  std::vector<double> terms;
  double total = 0.0;
};

/// Σ a_k b_k.
double sum_lhs(const PositiveTuple& a, const PositiveTuple& b);

/// (Σ a_k^p)^(1/p) (Σ b_k^q)^(1/q).
double classical_sum_bound(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps);

/// term_i = (Σ_k c_k^(i) a_k^p)^(1/p) (Σ_k c_k^(i) b_k^q)^(1/q).
RefinedSum refined_sum_weighted(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps,
                                const DiscreteWeightPartition& partition);

RefinedSum refined_sum_linear(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps);

/// 1e-9 * classical.
double default_sum_report_tolerance(double classical) noexcept;

SumChainReport verify_sum_chain(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps,
                                const DiscreteWeightPartition& partition,
                                std::optional<double> report_tol = std::nullopt);

}  // namespace holder
