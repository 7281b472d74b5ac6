#include "ncquad/weights.hpp"

#include "ncquad/rational_poly.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ncquad {

WeightSet compute_weights(int n) {
  if (n < 2) throw std::invalid_argument("compute_weights requires n >= 2");
  // w_0..w_{n+1}; the odd-n error ratio needs the degree-(n+1) element.
  std::vector<RationalPoly> w = newton_basis(n + 1);
  const Rational upper(n - 1);
  const Rational lower(0);

  WeightSet ws;
  ws.n = n;
  ws.weights.reserve(n);
  for (int i = 0; i < n; ++i)
    ws.weights.push_back({integrate_poly(w[i], lower, upper), i + 1});

  const Rational first_order = ws.weights[1].value;  // (n-1)^2 / 2, never zero
  if (ws.odd()) {
    ws.error_coeff = {integrate_poly(w[n + 1], lower, upper) / first_order, n};
    ws.degree = n;
  } else {
    ws.error_coeff = {integrate_poly(w[n], lower, upper) / first_order, n - 1};
    ws.degree = n - 1;
  }
  return ws;
}

NewtonIntegralTriple newton_integrals(int n) {
  if (n < 1) throw std::invalid_argument("newton_integrals requires n >= 1");
  const RationalPoly wn = newton_basis(n).back();
  const Rational lower(0);
  return {
      integrate_poly(wn, lower, Rational(n - 1)),
      integrate_poly(wn, lower, Rational(n)),
      integrate_poly(wn, lower, Rational(n - 2)),
  };
}

std::string weights_to_json(const WeightSet& ws) {
  nlohmann::ordered_json j;
  j["n"] = ws.n;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : ws.weights) {
    arr.push_back({{"num", numerator_str(w.value)},
                   {"den", denominator_str(w.value)},
                   {"h_power", w.h_power}});
  }
  j["weights"] = std::move(arr);
  j["error_coeff"] = {{"num", numerator_str(ws.error_coeff.value)},
                      {"den", denominator_str(ws.error_coeff.value)},
                      {"h_power", ws.error_coeff.h_power},
                      {"parity", ws.odd() ? "odd" : "even"}};
  j["degree"] = ws.degree;
  return j.dump(2);
}

}  // namespace ncquad
