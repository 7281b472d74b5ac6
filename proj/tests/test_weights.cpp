#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncquad/rational_poly.hpp"
#include "ncquad/weights.hpp"

#include <json.hpp>

using namespace ncquad;

namespace {

// Independent oracle: closed Newton-Cotes weights on the unit nodes 0..n-1
// by exact integration of the Lagrange basis polynomials.
std::vector<Rational> lagrange_nodal_weights(int n) {
  std::vector<Rational> c;
  c.reserve(n);
  for (int j = 0; j < n; ++j) {
    RationalPoly num = RationalPoly::constant(Rational(1));
    Rational den(1);
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      num = num * (RationalPoly::variable() - RationalPoly::constant(Rational(k)));
      den *= Rational(j - k);
    }
    c.push_back(integrate_poly(num, Rational(0), Rational(n - 1)) / den);
  }
  return c;
}

// Nodal form of the divided-difference rule: expand each difference over the
// unit nodes and accumulate the coefficient of every f(x_m).
std::vector<Rational> nodal_weights_from_difference_form(const WeightSet& ws) {
  const int n = ws.n;
  std::vector<Rational> c(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m <= i; ++m) {
      Rational denom(1);
      for (int l = 0; l <= i; ++l)
        if (l != m) denom *= Rational(m - l);
      c[m] += ws.weights[i].value / denom;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("weight table rows n=2..9 and degrees") {
  // One row per n: the exact weights; degrees alternate n-1 / n with parity.
  const std::vector<std::vector<const char*>> rows = {
      {"1", "1/2"},
      {"2", "2", "2/3"},
      {"3", "9/2", "9/2", "9/4"},
      {"4", "8", "40/3", "16", "112/15"},
      {"5", "25/2", "175/6", "225/4", "425/6", "475/12"},
      {"6", "18", "54", "144", "1476/5", "396", "1476/7"},
      {"7", "49/2", "539/6", "1225/4", "26117/30", "7497/4", "30919/12", "36799/24"},
      {"8", "32", "416/3", "576", "31424/15", "18688/3", "290048/21", "58880/3", "506368/45"},
  };
  const int degrees[] = {1, 3, 3, 5, 5, 7, 7, 9};

  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    WeightSet ws = compute_weights(n);
    CHECK(ws.n == n);
    CHECK(ws.degree == degrees[n - 2]);
    REQUIRE(static_cast<int>(ws.weights.size()) == n);
    for (int i = 0; i < n; ++i) {
      CAPTURE(i);
      CHECK(ws.weights[i].value == parse_rational(rows[n - 2][i]));
      CHECK(ws.weights[i].h_power == i + 1);
    }
  }
}

TEST_CASE("error coefficients match the published specializations") {
  CHECK(compute_weights(2).error_coeff == HCoefficient{make_rational(-1, 3), 1});
  CHECK(compute_weights(3).error_coeff == HCoefficient{make_rational(-2, 15), 3});
  CHECK(compute_weights(5).error_coeff == HCoefficient{make_rational(-16, 21), 5});
  CHECK(compute_weights(7).error_coeff == HCoefficient{make_rational(-72, 5), 7});
}

TEST_CASE("weights are strictly positive for n=2..12") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& w : compute_weights(n).weights) CHECK(w.value > 0);
}

TEST_CASE("difference form equals the Lagrange-integration nodal rule, n=2..12") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    WeightSet ws = compute_weights(n);
    std::vector<Rational> expected = lagrange_nodal_weights(n);
    std::vector<Rational> got = nodal_weights_from_difference_form(ws);
    REQUIRE(got.size() == expected.size());
    for (int j = 0; j < n; ++j) CHECK(got[j] == expected[j]);
  }
}

TEST_CASE("parity of the Newton integrals") {
  for (int n = 1; n <= 11; n += 2) CHECK(newton_integrals(n).over_n_minus_1 == 0);
  for (int n = 2; n <= 12; n += 2) CHECK(newton_integrals(n).over_n_minus_1 != 0);
  for (int n = 2; n <= 12; ++n) CHECK(newton_integrals(n).over_n != 0);
  // [0, n-2] collapses to the empty interval at n=2; from n=3 on the
  // integral never vanishes (n=3 gives exactly 1/4).
  CHECK(newton_integrals(2).over_n_minus_2 == 0);
  CHECK(newton_integrals(3).over_n_minus_2 == make_rational(1, 4));
  for (int n = 3; n <= 12; ++n) CHECK(newton_integrals(n).over_n_minus_2 != 0);
}

TEST_CASE("compute_weights and newton_integrals reject bad n") {
  CHECK_THROWS_AS(compute_weights(1), std::invalid_argument);
  CHECK_THROWS_AS(compute_weights(0), std::invalid_argument);
  CHECK_THROWS_AS(newton_integrals(0), std::invalid_argument);
}

TEST_CASE("degree formula extends past the published table") {
  CHECK(compute_weights(11).degree == 11);
  CHECK(compute_weights(12).degree == 11);
}

TEST_CASE("weights export as JSON with exact numerators and denominators") {
  WeightSet ws = compute_weights(9);
  auto j = nlohmann::json::parse(weights_to_json(ws));
  CHECK(j["n"] == 9);
  CHECK(j["degree"] == 9);
  REQUIRE(j["weights"].size() == 9);
  CHECK(j["weights"][8]["num"] == "506368");
  CHECK(j["weights"][8]["den"] == "45");
  CHECK(j["weights"][8]["h_power"] == 9);
  CHECK(j["error_coeff"]["parity"] == "odd");

  auto j2 = nlohmann::json::parse(weights_to_json(compute_weights(2)));
  CHECK(j2["error_coeff"]["num"] == "-1");
  CHECK(j2["error_coeff"]["den"] == "3");
  CHECK(j2["error_coeff"]["h_power"] == 1);
  CHECK(j2["error_coeff"]["parity"] == "even");
}
