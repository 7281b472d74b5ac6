#include "ncquad/divdiff.hpp"

#include <stdexcept>

namespace ncquad {

namespace {

void check_distinct(const std::vector<Real>& nodes, int count) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("degenerate panel: coincident nodes");
}

std::vector<Real> triangle_column(const std::vector<Real>& nodes, const std::vector<Real>& values,
                                  int up_to_order, bool keep_all) {
  std::vector<Real> col(values.begin(), values.begin() + up_to_order + 1);
  std::vector<Real> leading;
  if (keep_all) {
    leading.reserve(up_to_order + 1);
    leading.push_back(col[0]);
  }
  for (int order = 1; order <= up_to_order; ++order) {
    for (int j = 0; j + order <= up_to_order; ++j)
      col[j] = (col[j + 1] - col[j]) / (nodes[j + order] - nodes[j]);
    if (keep_all) leading.push_back(col[0]);
  }
  return keep_all ? leading : std::vector<Real>{col[0]};
}

}  // namespace

Real divided_difference(const std::vector<Real>& nodes, const std::vector<Real>& values,
                        int order) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("divided_difference: node/value length mismatch");
  if (order < 0 || order + 1 > static_cast<int>(nodes.size()))
    throw std::invalid_argument("divided_difference: order out of range");
  check_distinct(nodes, order + 1);
  return triangle_column(nodes, values, order, false)[0];
}

std::vector<Real> leading_differences(const std::vector<Real>& nodes,
                                      const std::vector<Real>& values) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("leading_differences: node/value length mismatch");
  if (nodes.empty()) return {};
  const int m = static_cast<int>(nodes.size()) - 1;
  check_distinct(nodes, m + 1);
  return triangle_column(nodes, values, m, true);
}

Panel Panel::make(std::vector<Real> x, std::vector<Real> y, Real h, int precision) {
  if (x.size() < 2) throw std::invalid_argument("panel needs at least 2 nodes");
  if (x.size() != y.size()) throw std::invalid_argument("panel node/value length mismatch");
  if (!(h.sign() > 0)) throw std::invalid_argument("panel step must be positive");

  // Tolerance scaled by the data magnitude: nodes materialized as
  // a + j*h at the working precision carry rounding proportional to |x|.
  Real scale = abs(h);
  if (abs(x.front()) > scale) scale = abs(x.front());
  if (abs(x.back()) > scale) scale = abs(x.back());
  const Real tol = Real::pow10(-precision + 2, precision) * scale;
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (!(x[i + 1] > x[i])) throw std::invalid_argument("panel nodes must be strictly increasing");
    if (abs(x[i + 1] - x[i] - h) > tol)
      throw std::invalid_argument("panel nodes are not equally spaced");
  }

  Panel p;
  p.n = static_cast<int>(x.size());
  p.x = std::move(x);
  p.y = std::move(y);
  p.h = std::move(h);
  p.precision = precision;
  return p;
}

Panel Panel::make(std::vector<Real> x, std::vector<Real> y, int precision) {
  if (x.size() < 2) throw std::invalid_argument("panel needs at least 2 nodes");
  Real h = x[1] - x[0];
  return make(std::move(x), std::move(y), std::move(h), precision);
}

std::vector<Real> full_table(const Panel& panel) { return leading_differences(panel.x, panel.y); }

ExtendedPanel ExtendedPanel::make(Panel base, const Integrand& f) {
  const int n = base.n;
  std::vector<Real> mx;
  mx.push_back((base.x[0] + base.x[1]) / 2);
  if (n % 2 != 0) mx.push_back((base.x[n - 2] + base.x[n - 1]) / 2);
  std::vector<Real> my;
  my.reserve(mx.size());
  for (const Real& m : mx) my.push_back(f(m));
  return make_with_values(std::move(base), std::move(mx), std::move(my));
}

ExtendedPanel ExtendedPanel::make_with_values(Panel base, std::vector<Real> mid_x,
                                              std::vector<Real> mid_y) {
  const size_t expected = base.n % 2 == 0 ? 1 : 2;
  if (mid_x.size() != expected || mid_y.size() != expected)
    throw std::invalid_argument("extended panel midpoint count does not match parity");
  for (const Real& m : mid_x)
    for (const Real& xb : base.x)
      if (m == xb) throw std::invalid_argument("midpoint coincides with a panel node");
  ExtendedPanel e;
  e.base = std::move(base);
  e.mid_x = std::move(mid_x);
  e.mid_y = std::move(mid_y);
  return e;
}

}  // namespace ncquad
