#pragma once

#include <functional>
#include <span>
#include <vector>

#include "holder/error.hpp"
#include "holder/interval.hpp"

namespace holder {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  /// Upper bound on the number of bisections performed in one call.
  int max_subdivisions = 50;

  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  /// Absolute error estimate, always >= 0.
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  /// False when the subdivision budget ran out before the tolerance was met;
  /// value and error_estimate are then the best available.
  bool converged = true;
};

/// Raised by callers that require a converged integral.
class QuadratureError : public Error {
 public:
  explicit QuadratureError(const IntegralResult& best);

  const IntegralResult& best() const noexcept { return best_; }

 private:
  IntegralResult best_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (10/21 point) integration.
///
/// `breaks` are points where the integrand is known to have a kink; the
/// interval is split there before any adaptive refinement. Breaks outside the
/// open interval are ignored. A non-finite integrand value raises DomainError.
IntegralResult integrate(const Integrand& f, const Interval& interval, const QuadratureConfig& config,
                         std::span<const double> breaks = {});

/// Same as integrate() but raises QuadratureError when not converged.
IntegralResult integrate_checked(const Integrand& f, const Interval& interval, const QuadratureConfig& config,
                                 std::span<const double> breaks = {});

/// Locations where `f` changes sign or vanishes, found by scanning `cells`
/// uniform cells and bisecting each bracket to full precision. Sorted,
/// strictly inside the interval.
std::vector<double> find_sign_changes(const Integrand& f, const Interval& interval, int cells = 128);

}  // namespace holder
