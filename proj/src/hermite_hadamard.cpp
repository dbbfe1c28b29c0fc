#include "holder/hermite_hadamard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "holder/error.hpp"

namespace holder {

namespace {

constexpr int kDerivativeProbes = 21;

// Five-point central difference; step scaled to the magnitude of x.
double central_difference(const Expr& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

// |f'(a)|^q and |f'(b)|^q divided by scale^q, scale = max(|f'(a)|, |f'(b)|),
// so that every bracket [..]^(1/q) is taken on values in [0, 1].
struct EndpointPowers {
  double at_a;
  double at_b;
  double scale;
};

EndpointPowers endpoint_powers(const HHInput& input) {
  const double q = input.exps().q();
  const double da = std::abs(input.f_prime()(input.interval().a()));
  const double db = std::abs(input.f_prime()(input.interval().b()));
  const double scale = std::max(da, db);
  if (scale == 0.0) return {0.0, 0.0, 0.0};
  return {std::pow(da / scale, q), std::pow(db / scale, q), scale};
}

double prefactor(const HHInput& input, double denominator) {
  const double p = input.exps().p();
  return input.interval().length() / (denominator * std::pow(p + 1.0, 1.0 / p));
}

}  // namespace

HHInput::HHInput(Expr f, Expr f_prime, Interval interval, ConjugateExponents exps)
    : f_(std::move(f)), f_prime_(std::move(f_prime)), interval_(interval), exps_(exps) {
  for (int j = 1; j <= kDerivativeProbes; ++j) {
    const double x = interval_.grid_point(j, kDerivativeProbes + 2);
    const double supplied = f_prime_(x);
    const double numeric = central_difference(f_, x);
    if (std::abs(supplied - numeric) > std::max(1e-6, 1e-6 * std::abs(supplied))) {
      std::ostringstream os;
      os.precision(10);
      os << "derivative mismatch at x = " << x << ": supplied f' = " << supplied << ", central difference = "
         << numeric;
      throw InvalidArgument(os.str());
    }
  }
}

double trapezoid_defect(const HHInput& input, const QuadratureConfig& cfg) {
  const Interval& iv = input.interval();
  const Expr& f = input.f();
  std::vector<double> breaks;
  for (const Expr& arg : abs_arguments(f)) {
    const auto roots = find_sign_changes([&arg](double x) { return arg(x); }, iv);
    breaks.insert(breaks.end(), roots.begin(), roots.end());
  }
  const double integral = integrate_checked([&f](double x) { return f(x); }, iv, cfg, breaks).value;
  return std::abs(0.5 * (f(iv.a()) + f(iv.b())) - integral / iv.length());
}

double dragomir_bound(const HHInput& input) {
  const auto [u, v, scale] = endpoint_powers(input);
  const double q = input.exps().q();
  return prefactor(input, 2.0) * scale * std::pow(0.5 * (u + v), 1.0 / q);
}

double refined_hh_bound(const HHInput& input) {
  const auto [u, v, scale] = endpoint_powers(input);
  const double q = input.exps().q();
  return prefactor(input, 4.0) * scale *
         (std::pow((2.0 * u + v) / 3.0, 1.0 / q) + std::pow((u + 2.0 * v) / 3.0, 1.0 / q));
}

bool convexity_probe(const Expr& e, double q, const Interval& interval, int samples) {
  if (samples < 3) throw InvalidArgument("convexity_probe needs at least 3 samples");
  std::vector<double> xs(samples);
  std::vector<double> ys(samples);
  for (int j = 0; j < samples; ++j) {
    xs[j] = interval.grid_point(j, samples);
    ys[j] = std::pow(std::abs(e(xs[j])), q);
  }
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 2; j < samples; ++j) {
      const double mid = std::pow(std::abs(e(0.5 * (xs[i] + xs[j]))), q);
      if (mid > 0.5 * (ys[i] + ys[j]) + 1e-10) return false;
    }
  }
  return true;
}

double hh_moment_closed_form(double p) noexcept { return 1.0 / (2.0 * (p + 1.0)); }

double hh_moment_quadrature(double p, const QuadratureConfig& cfg) {
  const std::array<double, 1> kink{0.5};
  return integrate_checked([p](double t) { return t * std::pow(std::abs(1.0 - 2.0 * t), p); }, Interval(0.0, 1.0),
                           cfg, kink)
      .value;
}

double default_hh_tolerance(double dragomir) noexcept { return 1e-8 * std::max(1.0, dragomir); }

HHReport hh_report(const HHInput& input, const QuadratureConfig& cfg, std::optional<double> report_tol) {
  HHReport r;
  r.moment_closed_form = hh_moment_closed_form(input.exps().p());
  r.moment_quadrature = hh_moment_quadrature(input.exps().p(), cfg);
  if (std::abs(r.moment_closed_form - r.moment_quadrature) > 1e-9) {
    throw InvalidArgument("moment cross-check failed: closed form and quadrature disagree");
  }
  r.defect = trapezoid_defect(input, cfg);
  r.dragomir = dragomir_bound(input);
  r.refined = refined_hh_bound(input);
  r.tolerance = report_tol.value_or(default_hh_tolerance(r.dragomir));
  r.convexity_ok = convexity_probe(input.f_prime(), input.exps().q(), input.interval());
  r.ordering_ok = r.refined <= r.dragomir + r.tolerance;
  r.bound_ok = r.defect <= r.refined + r.tolerance;
  return r;
}

}  // namespace holder
