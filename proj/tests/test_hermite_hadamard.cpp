#include <doctest.h>

#include <cmath>
#include <random>

#include "holder/error.hpp"
#include "holder/harness.hpp"
#include "holder/hermite_hadamard.hpp"
#include "oracles.hpp"

using namespace holder;

namespace {

const Interval kUnit(0.0, 1.0);
const ConjugateExponents kTwo = ConjugateExponents::from_p(2.0);

HHInput input(const char* f, const char* fp, double a, double b, const ConjugateExponents& exps) {
  return HHInput(parse(f), parse(fp), Interval(a, b), exps);
}

// Independent scalar forms of the two bounds.
double dragomir_oracle(double a, double b, double da, double db, double p, double q) {
  return (b - a) / (2 * std::pow(p + 1, 1 / p)) * std::pow((std::pow(std::abs(da), q) + std::pow(std::abs(db), q)) / 2, 1 / q);
}

double refined_oracle(double a, double b, double da, double db, double p, double q) {
  const double u = std::pow(std::abs(da), q);
  const double v = std::pow(std::abs(db), q);
  return (b - a) / (4 * std::pow(p + 1, 1 / p)) * (std::pow((2 * u + v) / 3, 1 / q) + std::pow((u + 2 * v) / 3, 1 / q));
}

}  // namespace

TEST_CASE("trapezoid_defect examples") {
  CHECK(std::abs(trapezoid_defect(input("x", "1", 0, 1, kTwo))) <= 1e-15);
  CHECK(std::abs(trapezoid_defect(input("x^2", "2*x", 0, 1, kTwo)) - 1.0 / 6.0) <= 1e-14);
  const double e = std::exp(1.0);
  CHECK(std::abs(trapezoid_defect(input("exp(x)", "exp(x)", 0, 1, kTwo)) - ((1 + e) / 2 - (e - 1))) <= 1e-14);
  CHECK(trapezoid_defect(input("exp(x)", "exp(x)", 0, 1, kTwo)) == doctest::Approx(0.1408591).epsilon(1e-6));
}

TEST_CASE("dragomir_bound examples") {
  const double value = dragomir_bound(input("x^2", "2*x", 0, 1, kTwo));
  CHECK(std::abs(value - std::sqrt(2.0) / (2 * std::sqrt(3.0))) <= 1e-15);
  CHECK(value == doctest::Approx(0.4082483).epsilon(1e-7));
  // f' vanishes at both endpoints.
  CHECK(dragomir_bound(input("x^3/3 - x^2/2", "x^2 - x", 0, 1, kTwo)) == 0.0);
  // Same endpoint derivative values on an interval twice as long.
  const auto exps = ConjugateExponents::from_p(3.0);
  const double one = dragomir_bound(input("x^2 + 0*x", "2*x", 1, 2, exps));
  const double two = dragomir_bound(input("x^2/2 + x/2", "x + 0.5", 1.5, 3.5, exps));
  CHECK(std::abs(two - 2 * one) <= 1e-14);
}

TEST_CASE("refined_hh_bound examples") {
  const double value = refined_hh_bound(input("x^2", "2*x", 0, 1, kTwo));
  const double exact = (std::sqrt(4.0 / 3.0) + std::sqrt(8.0 / 3.0)) / (4 * std::sqrt(3.0));
  CHECK(std::abs(value - exact) <= 1e-15);
  CHECK(value <= dragomir_bound(input("x^2", "2*x", 0, 1, kTwo)));
  CHECK(refined_hh_bound(input("x^3/3 - x^2/2", "x^2 - x", 0, 1, kTwo)) == 0.0);
  // |f'(a)| = |f'(b)|: the two bounds coincide.
  const auto exps = ConjugateExponents::from_p(2.5);
  const auto sym = input("x^2", "2*x", -1.5, 1.5, exps);
  CHECK(std::abs(refined_hh_bound(sym) - dragomir_bound(sym)) <= 1e-15);
}

TEST_CASE("bounds agree with the scalar oracles") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> pd(1.05, 20.0);
  std::uniform_real_distribution<double> ab(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    double a = ab(rng), b = ab(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    const auto exps = ConjugateExponents::from_p(pd(rng));
    const auto in = input("exp(1.5*x) + x^2", "1.5*exp(1.5*x) + 2*x", a, b, exps);
    const double da = 1.5 * std::exp(1.5 * a) + 2 * a;
    const double db = 1.5 * std::exp(1.5 * b) + 2 * b;
    CHECK(dragomir_bound(in) == doctest::Approx(dragomir_oracle(a, b, da, db, exps.p(), exps.q())).epsilon(1e-13));
    CHECK(refined_hh_bound(in) == doctest::Approx(refined_oracle(a, b, da, db, exps.p(), exps.q())).epsilon(1e-13));
  }
}

TEST_CASE("convexity_probe examples") {
  CHECK(convexity_probe(parse("2*x"), 2.0, kUnit));
  CHECK_FALSE(convexity_probe(parse("sqrt(x)"), 1.0, Interval(0.01, 1.0)));
  CHECK(convexity_probe(parse("exp(x)"), 3.0, kUnit));
  CHECK_THROWS_AS(convexity_probe(parse("x"), 2.0, kUnit, 2), InvalidArgument);
}

TEST_CASE("hh_report examples") {
  const auto r = hh_report(input("x^2", "2*x", 0, 1, kTwo));
  CHECK(std::abs(r.defect - 1.0 / 6.0) <= 1e-9);
  CHECK(std::abs(r.dragomir - std::sqrt(2.0) / (2 * std::sqrt(3.0))) <= 1e-9);
  CHECK(std::abs(r.refined - 0.40236892706218) <= 1e-9);
  CHECK(r.convexity_ok);
  CHECK(r.ordering_ok);
  CHECK(r.bound_ok);
  CHECK(r.moment_closed_form == 1.0 / 6.0);

  const auto lin = hh_report(input("x", "1", 0, 1, kTwo));
  CHECK(std::abs(lin.defect) <= 1e-15);
  CHECK(lin.refined == lin.dragomir);
  CHECK(lin.ordering_ok);
}

TEST_CASE("x^4 with p = 3 against a tighter quadrature oracle") {
  const auto exps = ConjugateExponents(3.0, 1.5);
  const auto r = hh_report(input("x^4", "4*x^3", 0, 1, exps));
  CHECK(r.ordering_ok);
  CHECK(r.convexity_ok);
  CHECK(r.bound_ok);
  CHECK(r.defect <= r.refined);
  // ∫x^4 = 1/5, defect = 1/2 - 1/5.
  CHECK(std::abs(r.defect - 0.3) <= 1e-10);
  const double simpson = oracle::simpson([](double x) { return x * x * x * x; }, 0, 1);
  CHECK(std::abs(r.defect - (0.5 - simpson)) <= 1e-10);
}

TEST_CASE("mismatched derivative is rejected") {
  CHECK_THROWS_AS(input("x^2", "3*x", 0, 1, kTwo), InvalidArgument);
  CHECK_THROWS_AS(input("sin(x)", "sin(x)", 0, 3, kTwo), InvalidArgument);
  CHECK_NOTHROW(input("sin(x)", "cos(x)", 0, 3, kTwo));
  CHECK_NOTHROW(input("exp(3*x)", "3*exp(3*x)", -2, 2, kTwo));
}

TEST_CASE("moment identity cross-check") {
  for (double p : {1.5, 2.0, 3.0, 7.0}) {
    CHECK(hh_moment_closed_form(p) == 1.0 / (2.0 * (p + 1.0)));
    CHECK(std::abs(hh_moment_quadrature(p) - hh_moment_closed_form(p)) <= 1e-9);
    const double simpson = oracle::simpson_split(
        [p](double t) { return t * std::pow(std::abs(1 - 2 * t), p); }, 0.0, 1.0, {0.5});
    CHECK(std::abs(simpson - 1.0 / (2.0 * (p + 1.0))) <= 1e-9);
  }
}

TEST_CASE("power-mean ordering on random (u, v, s)") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uv(0.0, 1000.0);
  std::uniform_real_distribution<double> sd(0.0, 1.0);
  int violations = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = uv(rng), v = uv(rng);
    double s = sd(rng);
    if (s == 0.0) s = 0.5;
    const double lhs = 0.5 * std::pow((2 * u + v) / 3, s) + 0.5 * std::pow((u + 2 * v) / 3, s);
    const double rhs = std::pow((u + v) / 2, s);
    if (lhs > rhs + 1e-12) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("bound validity on generated convex-derivative families") {
  SweepConfig cfg;
  cfg.family = Family::hh;
  cfg.seed = 9;
  for (std::uint64_t trial = 0; trial < 150; ++trial) {
    const auto c = std::get<HHCase>(generate_case(cfg, trial));
    const auto r = hh_report(c.input);
    INFO(c.template_kind, " f = ", to_string(c.input.f()), " p = ", c.input.exps().p());
    CHECK(r.ordering_ok);
    CHECK(r.refined <= r.dragomir + r.tolerance);
    if (r.convexity_ok) {
      CHECK(r.defect <= r.refined + r.tolerance);
      CHECK(r.bound_ok);
    }
  }
}

TEST_CASE("translation invariance") {
  const auto exps = ConjugateExponents::from_p(2.5);
  const auto base = hh_report(input("exp(0.7*x)", "0.7*exp(0.7*x)", -1, 2, exps));
  for (const char* f : {"exp(0.7*x) + 3.5", "exp(0.7*x) - 100", "exp(0.7*x) + 0.001"}) {
    const auto r = hh_report(input(f, "0.7*exp(0.7*x)", -1, 2, exps));
    CHECK(std::abs(r.defect - base.defect) <= 1e-10);
    CHECK(r.dragomir == base.dragomir);
    CHECK(r.refined == base.refined);
    CHECK(r.convexity_ok == base.convexity_ok);
    CHECK(r.ordering_ok == base.ordering_ok);
    CHECK(r.bound_ok == base.bound_ok);
  }
}
