#pragma once

#include <vector>

namespace holder {

/// Hölder-conjugate pair: p > 1, q > 1, 1/p + 1/q = 1 (to 1e-12).
///
/// p is capped at 64; above that |f|^p leaves double range for moderate f.
class ConjugateExponents {
 public:
  ConjugateExponents(double p, double q);

  /// Derives q = p / (p - 1).
  static ConjugateExponents from_p(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// The pair with roles exchanged. q must itself lie in (1, 64].
  ConjugateExponents swapped() const { return ConjugateExponents(q_, p_); }

 private:
  double p_;
  double q_;
};

inline constexpr double kMaxExponent = 64.0;

/// Chain values shared by the integral and sum forms.
///
/// chain_ok holds when lhs <= refined_total + tolerance and
/// refined_total <= classical + tolerance.
struct ChainReport {
  double lhs = 0.0;
  std::vector<double> refined_terms;
  double refined_total = 0.0;
  double classical = 0.0;
  double gap_refined = 0.0;  // classical - refined_total
  double gap_lhs = 0.0;      // refined_total - lhs
  bool chain_ok = false;
  double tolerance = 0.0;
};

using BoundChainReport = ChainReport;
using SumChainReport = ChainReport;

/// Fills the derived gap fields and the verdict from lhs/terms/total/classical.
ChainReport make_chain_report(double lhs, std::vector<double> terms, double refined_total, double classical,
                              double tolerance);

/// Young's inequality: x*y <= x^p/p + y^q/q for x, y >= 0.
struct YoungBound {
  double product;
  double bound;
};

YoungBound young_bound(double x, double y, const ConjugateExponents& exps);

}  // namespace holder
