#include "holder/sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holder/compensated.hpp"
#include "holder/error.hpp"

namespace holder {

namespace {

void require_same_length(const PositiveTuple& a, const PositiveTuple& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// (Σ w_k v_k^s)^(1/s); entries are divided by their maximum before the power
// is taken so that large s cannot overflow. A null weight row means all ones.
double weighted_power_mean(std::span<const double> v, const std::vector<double>* weights, double s) {
  const double scale = *std::max_element(v.begin(), v.end());
  CompensatedSum acc;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double r = std::pow(v[k] / scale, s);
    acc += weights != nullptr ? (*weights)[k] * r : r;
  }
  return scale * std::pow(std::max(acc.value(), 0.0), 1.0 / s);
}

double holder_term(const PositiveTuple& a, const PositiveTuple& b, const std::vector<double>* weights,
                   const ConjugateExponents& exps) {
  return weighted_power_mean(a.values(), weights, exps.p()) * weighted_power_mean(b.values(), weights, exps.q());
}

}  // namespace

PositiveTuple::PositiveTuple(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("tuple must have at least one entry");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k]) || !(values_[k] > 0.0)) {
      throw InvalidArgument("tuple entries must be positive (entry " + std::to_string(k + 1) + ")");
    }
  }
}

DiscreteWeightPartition::DiscreteWeightPartition(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw InvalidArgument("invalid partition: at least two rows are required");
  const std::size_t n = rows_.front().size();
  if (n == 0) throw InvalidArgument("invalid partition: rows must not be empty");
  for (const auto& row : rows_) {
    if (row.size() != n) throw InvalidArgument("invalid partition: rows differ in length");
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) throw InvalidArgument("invalid partition: weights must be nonnegative");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    CompensatedSum column;
    for (const auto& row : rows_) column += row[k];
    if (std::abs(column.value() - 1.0) > 1e-12) {
      throw InvalidArgument("invalid partition: column " + std::to_string(k + 1) + " sums to " +
                            std::to_string(column.value()));
    }
  }
}

DiscreteWeightPartition DiscreteWeightPartition::linear(std::size_t n) {
  if (n == 0) throw InvalidArgument("invalid partition: rows must not be empty");
  std::vector<double> up(n);
  std::vector<double> down(n);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 1; k <= n; ++k) {
    up[k - 1] = static_cast<double>(k) / nd;
    down[k - 1] = static_cast<double>(n - k) / nd;
  }
  return DiscreteWeightPartition({std::move(up), std::move(down)});
}

DiscreteWeightPartition DiscreteWeightPartition::trigonometric(std::size_t n) {
  if (n == 0) throw InvalidArgument("invalid partition: rows must not be empty");
  std::vector<double> s(n);
  std::vector<double> c(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double sk = std::sin(static_cast<double>(k));
    const double ck = std::cos(static_cast<double>(k));
    s[k - 1] = sk * sk;
    c[k - 1] = ck * ck;
  }
  return DiscreteWeightPartition({std::move(s), std::move(c)});
}

DiscreteWeightPartition DiscreteWeightPartition::degenerate(std::size_t n, std::size_t m) {
  if (m < 2) throw InvalidArgument("invalid partition: at least two rows are required");
  std::vector<std::vector<double>> rows{std::vector<double>(n, 1.0)};
  for (std::size_t i = 1; i < m; ++i) rows.emplace_back(n, 0.0);
  return DiscreteWeightPartition(std::move(rows));
}

double sum_lhs(const PositiveTuple& a, const PositiveTuple& b) {
  require_same_length(a, b);
  CompensatedSum acc;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc.value();
}

double classical_sum_bound(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps) {
  require_same_length(a, b);
  return holder_term(a, b, nullptr, exps);
}

RefinedSum refined_sum_weighted(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps,
                                const DiscreteWeightPartition& partition) {
  require_same_length(a, b);
  if (partition.width() != a.size()) {
    throw InvalidArgument("invalid partition: width " + std::to_string(partition.width()) +
                          " does not match tuple length " + std::to_string(a.size()));
  }
  RefinedSum out;
  CompensatedSum total;
  for (const auto& row : partition.rows()) {
    const double term = holder_term(a, b, &row, exps);
    out.terms.push_back(term);
    total += term;
  }
  out.total = total.value();
  return out;
}

RefinedSum refined_sum_linear(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps) {
  return refined_sum_weighted(a, b, exps, DiscreteWeightPartition::linear(a.size()));
}

double default_sum_report_tolerance(double classical) noexcept { return 1e-9 * classical; }

SumChainReport verify_sum_chain(const PositiveTuple& a, const PositiveTuple& b, const ConjugateExponents& exps,
                                const DiscreteWeightPartition& partition, std::optional<double> report_tol) {
  const double lhs = sum_lhs(a, b);
  const double classical = classical_sum_bound(a, b, exps);
  RefinedSum refined = refined_sum_weighted(a, b, exps, partition);
  const double tol = report_tol.value_or(default_sum_report_tolerance(classical));
  if (!(tol >= 0.0)) throw InvalidArgument("report tolerance must be nonnegative");
  return make_chain_report(lhs, std::move(refined.terms), refined.total, classical, tol);
}

}  // namespace holder
