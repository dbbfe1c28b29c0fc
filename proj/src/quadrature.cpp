#include "holder/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "holder/compensated.hpp"

namespace holder {

namespace {

// Kronrod 21-point abscissae; odd indices are the embedded 10-point Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kKronrodWeights{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525614566, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

constexpr std::array<double, 5> kGaussWeights{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  // Error is at the level of floating-point noise; bisecting will not help.
  bool exhausted;
};

double sample(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw DomainError(x, "integrand is not finite");
  return y;
}

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = sample(f, center);
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  double magnitude = std::abs(kronrod);
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = sample(f, center - dx);
    const double f2 = sample(f, center + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    magnitude += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }

  Segment s{a, b, kronrod * half, std::abs((kronrod - gauss) * half), false};
  const double noise = 50.0 * eps * magnitude * std::abs(half);
  const double width_floor = 4.0 * eps * std::max(std::abs(a), std::abs(b));
  if (s.error <= noise || (b - a) <= width_floor) {
    s.error = std::max(s.error, noise);
    s.exhausted = true;
  }
  return s;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be at least 1");
}

namespace {

std::string format_estimate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

QuadratureError::QuadratureError(const IntegralResult& best)
    : Error("integral tolerance not reached after " + std::to_string(best.subdivisions_used) +
            " subdivisions (estimate " + format_estimate(best.error_estimate) + ")"),
      best_(best) {}

IntegralResult integrate(const Integrand& f, const Interval& interval, const QuadratureConfig& config,
                         std::span<const double> breaks) {
  config.validate();

  std::vector<double> cuts{interval.a()};
  for (double x : breaks) {
    if (x > interval.a() && x < interval.b()) cuts.push_back(x);
  }
  cuts.push_back(interval.b());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Segment> segments;
  segments.reserve(cuts.size() + static_cast<std::size_t>(config.max_subdivisions) + 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segments.push_back(gauss_kronrod(f, cuts[i], cuts[i + 1]));

  auto totals = [&segments]() {
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& s : segments) {
      value += s.value;
      error += s.error;
    }
    return std::pair{value.value(), error.value()};
  };

  IntegralResult result;
  for (;;) {
    const auto [value, error] = totals();
    result.value = value;
    result.error_estimate = error;
    const double tolerance = std::max(config.abs_tol, config.rel_tol * std::abs(value));
    if (error <= tolerance) break;

    auto worst = segments.end();
    for (auto it = segments.begin(); it != segments.end(); ++it) {
      if (!it->exhausted && (worst == segments.end() || it->error > worst->error)) worst = it;
    }
    // Only roundoff-limited segments remain: the achievable accuracy is reached.
    if (worst == segments.end()) break;
    if (result.subdivisions_used >= config.max_subdivisions) {
      result.converged = false;
      break;
    }

    const double a = worst->a;
    const double b = worst->b;
    const double mid = 0.5 * (a + b);
    *worst = gauss_kronrod(f, a, mid);
    segments.push_back(gauss_kronrod(f, mid, b));
    ++result.subdivisions_used;
  }
  return result;
}

IntegralResult integrate_checked(const Integrand& f, const Interval& interval, const QuadratureConfig& config,
                                 std::span<const double> breaks) {
  IntegralResult r = integrate(f, interval, config, breaks);
  if (!r.converged) throw QuadratureError(r);
  return r;
}

std::vector<double> find_sign_changes(const Integrand& f, const Interval& interval, int cells) {
  if (cells < 1) throw InvalidArgument("find_sign_changes needs at least one cell");
  std::vector<double> roots;
  const int points = cells + 1;
  double x_prev = interval.a();
  double f_prev = f(x_prev);
  for (int j = 1; j < points; ++j) {
    const double x = interval.grid_point(j, points);
    const double fx = f(x);
    if (fx == 0.0) {
      if (j + 1 < points) roots.push_back(x);
    } else if (f_prev != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      double lo = x_prev;
      double hi = x;
      const bool lo_negative = std::signbit(f_prev);
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x_prev = x;
    f_prev = fx;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace holder
