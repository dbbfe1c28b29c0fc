#include "holder/exponents.hpp"

#include <cmath>
#include <string>

#include "holder/error.hpp"

namespace holder {

ConjugateExponents::ConjugateExponents(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !(p > 1.0)) throw InvalidArgument("p must exceed 1");
  if (p > kMaxExponent) throw InvalidArgument("p must not exceed 64");
  if (!std::isfinite(q) || !(q > 1.0)) throw InvalidArgument("q must exceed 1");
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) throw InvalidArgument("exponents are not conjugate: 1/p + 1/q != 1");
}

ConjugateExponents ConjugateExponents::from_p(double p) {
  if (!std::isfinite(p) || !(p > 1.0)) throw InvalidArgument("p must exceed 1");
  return ConjugateExponents(p, p / (p - 1.0));
}

ChainReport make_chain_report(double lhs, std::vector<double> terms, double refined_total, double classical,
                              double tolerance) {
  ChainReport r;
  r.lhs = lhs;
  r.refined_terms = std::move(terms);
  r.refined_total = refined_total;
  r.classical = classical;
  r.gap_refined = classical - refined_total;
  r.gap_lhs = refined_total - lhs;
  r.tolerance = tolerance;
  if (classical == 0.0) {
    // Zero function: both sides must vanish.
    r.chain_ok = lhs <= tolerance && refined_total <= tolerance;
  } else {
    r.chain_ok = lhs <= refined_total + tolerance && refined_total <= classical + tolerance;
  }
  return r;
}

YoungBound young_bound(double x, double y, const ConjugateExponents& exps) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw InvalidArgument("young_bound requires x, y >= 0");
  return {x * y, std::pow(x, exps.p()) / exps.p() + std::pow(y, exps.q()) / exps.q()};
}

}  // namespace holder
