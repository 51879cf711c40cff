// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace spdisp {

namespace {

// Unfold boost's half-rule tables (positive abscissae only) into a full
// rule on [-1, 1].
template <unsigned Order>
void reference_rule(std::vector<double>& x, std::vector<double>& w) {
  using Rule = boost::math::quadrature::gauss<double, Order>;
  x.clear();
  w.clear();
  const auto& xs = Rule::abscissa();
  const auto& ws = Rule::weights();
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (xs[i] > 0.0) {
      x.push_back(-xs[i]);
      w.push_back(ws[i]);
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x.push_back(xs[i]);
    w.push_back(ws[i]);
  }
  // Even orders have no node at the origin; both loops above then emit
  // Order points in ascending order.
}

void reference_rule_for(int order, std::vector<double>& x,
                        std::vector<double>& w) {
  switch (order) {
    case 4:
      reference_rule<4>(x, w);
      return;
    case 8:
      reference_rule<8>(x, w);
      return;
    case 12:
      reference_rule<12>(x, w);
      return;
    case 16:
      reference_rule<16>(x, w);
      return;
    default:
      throw std::invalid_argument(
          "gauss_legendre_panels: order must be one of 4, 8, 12, 16");
  }
}

}  // namespace

QuadratureRule gauss_legendre_panels(const std::vector<double>& breakpoints,
                                     int order) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument(
        "gauss_legendre_panels: need at least two breakpoints");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw std::invalid_argument(
        "gauss_legendre_panels: breakpoints must be ascending");

  std::vector<double> x, w;
  reference_rule_for(order, x, w);

  QuadratureRule rule;
  rule.nodes.reserve((breakpoints.size() - 1) * x.size());
  rule.weights.reserve((breakpoints.size() - 1) * x.size());
  for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
    const double a = breakpoints[p];
    const double b = breakpoints[p + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(mid + half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
  }
  return rule;
}

std::vector<double> graded_breakpoints(double z_max, int n_panels,
                                       double scale) {
  if (!(z_max > 0.0) || n_panels < 1 || !(scale > 0.0))
    throw std::invalid_argument("graded_breakpoints: invalid arguments");
  std::vector<double> z(n_panels + 1);
  const double span = -std::expm1(-z_max / scale);  // 1 - e^{-z_max/scale}
  for (int k = 0; k <= n_panels; ++k) {
    const double u = static_cast<double>(k) / n_panels;
    z[k] = -scale * std::log1p(-u * span);
  }
  z.front() = 0.0;
  z.back() = z_max;  // guard against rounding in the endpoint
  return z;
}

std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& interior_breaks, double tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  std::vector<double> cuts{a};
  for (double c : interior_breaks)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    total += GK::integrate(f, cuts[i], cuts[i + 1], 15, tol);
  }
  return total;
}

}  // namespace spdisp
