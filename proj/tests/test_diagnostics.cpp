#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncquad/diagnostics.hpp"

#include <algorithm>
#include <random>

using namespace ncquad;

namespace {

constexpr int kP = 30;

Real g3_closed_form(const ExprAst& ast, const Real& x, const Real& h) {
  // |1 + (h/6) f''(x)/f'(x)|
  TaylorJet jet = jet_eval(ast, x, 2, kP);
  Real fp = jet.derivative(1);
  Real fpp = jet.derivative(2);
  return abs(Real::from_long(1, kP) + (h / 6) * (fpp / fp));
}

}  // namespace

TEST_CASE("three-point validity function equals the closed form") {
  ExprAst ast = parse("exp(-x^2)");
  WeightSet ws = compute_weights(3);
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> xs(0.05, 1.0);
  std::uniform_real_distribution<double> hs(0.05, 0.6);
  for (int trial = 0; trial < 30; ++trial) {
    Real x = Real::from_double(xs(rng), kP);
    Real h = Real::from_double(hs(rng), kP);
    Real generic = g_function(ast, x, h, ws, kP);
    Real closed = g3_closed_form(ast, x, h);
    CAPTURE(x.to_double());
    CHECK(abs(generic - closed) <= abs(closed) * Real::pow10(-10, kP));
  }
}

TEST_CASE("Gaussian spot value at x = 1/2, h = 1/2") {
  // closed form (1/6)|6 + h(1/x - 2x)| evaluates to 13/12 there
  ExprAst ast = parse("exp(-x^2)");
  Real g = g_function(ast, Real::from_double(0.5, kP), Real::from_double(0.5, kP),
                      compute_weights(3), kP);
  CHECK(ulps_between(g, Real::from_rational(make_rational(13, 12), kP)) <= 10.0);
}

TEST_CASE("linear integrands have g identically one") {
  ExprAst ast = parse("2*x + 1");
  for (int n : {2, 3, 5, 7}) {
    Real g = g_function(ast, Real::from_double(0.3, kP), Real::from_double(0.25, kP),
                        compute_weights(n), kP);
    CHECK(g == Real::from_long(1, kP));
  }
}

TEST_CASE("five-point validity function matches the tangent closed form") {
  // |1 - 4h^2/3 + (1/45)(14h^2 - 75) h tan(2x)|
  ExprAst ast = parse("sin(2*x)");
  WeightSet ws = compute_weights(5);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> xs(0.02, 0.6);
  std::uniform_real_distribution<double> hs(0.01, 0.25);
  for (int trial = 0; trial < 30; ++trial) {
    Real x = Real::from_double(xs(rng), kP);
    Real h = Real::from_double(hs(rng), kP);
    Real h2 = h * h;
    Real tan2x = sin(x * 2) / cos(x * 2);
    Real closed = abs(Real::from_long(1, kP) - h2 * 4 / 3 +
                      (h2 * 14 - Real::from_long(75, kP)) * h * tan2x / 45);
    Real generic = g_function(ast, x, h, ws, kP);
    CHECK(abs(generic - closed) <= abs(closed) * Real::pow10(-10, kP));
  }
}

TEST_CASE("g approaches one as the step shrinks") {
  ExprAst ast = parse("sin(2*x)");
  WeightSet ws = compute_weights(5);
  Real x = Real::from_double(0.3, kP);
  Real one = Real::from_long(1, kP);
  Real h = Real::from_double(0.125, kP);
  Real previous_gap = abs(g_function(ast, x, h, ws, kP) - one);
  for (int halving = 0; halving < 4; ++halving) {
    h = h / 2;
    Real gap = abs(g_function(ast, x, h, ws, kP) - one);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
}

TEST_CASE("g_function flags a vanishing first derivative") {
  ExprAst ast = parse("x^2");
  CHECK_THROWS_AS(
      g_function(ast, Real::zero(kP), Real::from_double(0.1, kP), compute_weights(3), kP),
      DerivativeNearZero);
}

TEST_CASE("condition report for the Gaussian example") {
  ExprAst ast = parse("exp(-x^2)");
  for (double h : {0.5, 0.25, 0.125, 0.0625}) {
    GCheckReport rep = check_condition(ast, Real::zero(kP), Real::from_long(1, kP), 3,
                                       Real::from_double(h, kP), 64, kP);
    CAPTURE(h);
    CHECK(rep.condition_holds);
    CHECK(rep.flagged_samples == 0);
    CHECK_FALSE(rep.fprime_zero_suspected);
    REQUIRE(rep.min_g.has_value());
    CHECK(*rep.min_g >= rep.h);
    CHECK(rep.samples.size() == 64);
  }
}

TEST_CASE("condition report for sin(2x) on [0, pi/5]") {
  ExprAst ast = parse("sin(2*x)");
  Real b = Real::pi(kP) / 5;
  for (double h : {0.125, 0.0625, 0.03125, 0.015625}) {
    GCheckReport rep =
        check_condition(ast, Real::zero(kP), b, 5, Real::from_double(h, kP), 64, kP);
    CAPTURE(h);
    CHECK(rep.condition_holds);
  }
}

TEST_CASE("a derivative sign change is reported") {
  ExprAst ast = parse("sin(x)");
  GCheckReport rep = check_condition(ast, Real::zero(kP), Real::pi(kP) * 2, 3,
                                     Real::from_double(0.1, kP), 64, kP);
  CHECK(rep.fprime_zero_suspected);
}

TEST_CASE("samples outside the integrand's domain are flagged, not fatal") {
  // sqrt expansions fail left of zero; the right half still yields a minimum
  ExprAst ast = parse("sqrt(x)");
  GCheckReport rep = check_condition(ast, Real::from_long(-1, kP), Real::from_long(1, kP), 3,
                                     Real::from_double(0.1, kP), 15, kP);
  CHECK(rep.flagged_samples >= 7);
  CHECK(rep.fprime_zero_suspected);
  CHECK(rep.min_g.has_value());
}

TEST_CASE("near-zero derivative samples are flagged and excluded from the minimum") {
  // grid of 3 over (-1, 1) hits x = 0 where the derivative of x^2 vanishes
  ExprAst ast = parse("x^2");
  GCheckReport rep = check_condition(ast, Real::from_long(-1, kP), Real::from_long(1, kP), 3,
                                     Real::from_double(0.1, kP), 3, kP);
  CHECK(rep.flagged_samples == 1);
  CHECK(rep.fprime_zero_suspected);
  REQUIRE(rep.min_g.has_value());
  CHECK(rep.samples.size() == 3);
  CHECK_FALSE(rep.samples[1].g.has_value());
}

TEST_CASE("grid validation and csv rendering") {
  ExprAst ast = parse("exp(x)");
  CHECK_THROWS_AS(check_condition(ast, Real::zero(kP), Real::from_long(1, kP), 3,
                                  Real::from_double(0.1, kP), 1, kP),
                  std::invalid_argument);
  GCheckReport rep = check_condition(ast, Real::zero(kP), Real::from_long(1, kP), 3,
                                     Real::from_double(0.1, kP), 4, kP);
  std::string csv = gcheck_csv(rep);
  CHECK(csv.rfind("x,g\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
