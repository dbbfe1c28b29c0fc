#pragma once

#include <optional>

#include "holder/exponents.hpp"
#include "holder/expr.hpp"
#include "holder/quadrature.hpp"

namespace holder {

/// A function, its user-supplied derivative, an interval and exponents.
///
/// Construction checks that f_prime matches a central difference of f at 21
/// interior points within max(1e-6, 1e-6 |f'|).
class HHInput {
 public:
  HHInput(Expr f, Expr f_prime, Interval interval, ConjugateExponents exps);

  const Expr& f() const noexcept { return f_; }
  const Expr& f_prime() const noexcept { return f_prime_; }
  const Interval& interval() const noexcept { return interval_; }
  const ConjugateExponents& exps() const noexcept { return exps_; }

 private:
  Expr f_;
  Expr f_prime_;
  Interval interval_;
  ConjugateExponents exps_;
};

struct HHReport {
  double defect = 0.0;
  double dragomir = 0.0;
  double refined = 0.0;
  /// |f'|^q passed the midpoint-convexity probe (sampling, not a proof).
  bool convexity_ok = false;
  /// refined <= dragomir + tolerance.
  bool ordering_ok = false;
  /// defect <= refined + tolerance; only meaningful when convexity_ok.
  bool bound_ok = false;
  double tolerance = 0.0;
  /// ∫_0^1 t|1-2t|^p dt in closed form and by quadrature.
  double moment_closed_form = 0.0;
  double moment_quadrature = 0.0;
};

/// |(f(a) + f(b))/2 - (1/(b-a)) ∫f|.
double trapezoid_defect(const HHInput& input, const QuadratureConfig& cfg = {});

/// (b-a)/(2(p+1)^(1/p)) * [(|f'(a)|^q + |f'(b)|^q)/2]^(1/q).
double dragomir_bound(const HHInput& input);

/// (b-a)/(4(p+1)^(1/p)) * { [(2|f'(a)|^q + |f'(b)|^q)/3]^(1/q) + [(|f'(a)|^q + 2|f'(b)|^q)/3]^(1/q) }.
double refined_hh_bound(const HHInput& input);

/// Midpoint convexity of |e|^q over all pairs of a uniform grid, with 1e-10 slack.
bool convexity_probe(const Expr& e, double q, const Interval& interval, int samples = 101);

/// 1 / (2(p+1)).
double hh_moment_closed_form(double p) noexcept;
/// ∫_0^1 t|1-2t|^p dt by quadrature, split at t = 1/2.
double hh_moment_quadrature(double p, const QuadratureConfig& cfg = {});

/// 1e-8 * max(1, dragomir).
double default_hh_tolerance(double dragomir) noexcept;

/// Raises InvalidArgument if the quadrature moment disagrees with the closed
/// form by more than 1e-9.
HHReport hh_report(const HHInput& input, const QuadratureConfig& cfg = {},
                   std::optional<double> report_tol = std::nullopt);

}  // namespace holder
