// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/erfc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spdisp {

namespace {

// Trapezoid step and truncation: e^{-(K h)^2} = e^{-49} is far below the
// double-precision floor relative to the O(1) sum, and the step places the
// Poisson image terms at e^{-(pi/h)^2} ~ 1e-69.
constexpr double kStep = 0.25;
constexpr int kTerms = 28;

using Cd = std::complex<double>;

// Trapezoidal sum over one staggered grid: sum_t e^{-t^2} / (z - t) with
// t = (k + offset) h, k = -K..K.
Cd grid_sum(Cd z, double offset) {
  Cd acc = 0.0;
  for (int k = -kTerms; k <= kTerms; ++k) {
    const double t = (static_cast<double>(k) + offset) * kStep;
    acc += std::exp(-t * t) / (z - t);
  }
  return acc;
}

}  // namespace

Cd faddeeva_w(Cd z) {
  if (z.imag() < 0.0)
    throw std::domain_error("faddeeva_w: argument must have Im z >= 0");
  const double pi = std::numbers::pi;
  // Pick the grid whose nodes (where the correction term has poles,
  // cancelled analytically but not numerically) are far from Re z.
  const double miss = std::abs(z.real() - kStep * std::round(z.real() / kStep));
  const bool integer_grid = miss >= 0.25 * kStep;
  const Cd sum = grid_sum(z, integer_grid ? 0.0 : 0.5);
  const Cd expo = std::exp(-2.0 * pi * Cd(0.0, 1.0) * z / kStep);
  const Cd corr = 2.0 * std::exp(-z * z) /
                  (integer_grid ? 1.0 - expo : 1.0 + expo);
  return Cd(0.0, kStep / pi) * sum + corr;
}

Cd complex_erfc(Cd xi) {
  if (xi == 0.0) return 1.0;
  if (xi.real() < 0.0) return 2.0 - complex_erfc(-xi);

  // erfc(xi) = e^{-xi^2} w(i xi).  Substituting z = i xi and folding
  // e^{-xi^2} into the correction term analytically leaves
  //   e^{-xi^2} (i h / pi) S  +  2 / (1 -+ e^{2 pi xi / h}),
  // whose exponential can only overflow towards a zero correction.
  const Cd z = Cd(0.0, 1.0) * xi;
  const double pi = std::numbers::pi;
  const double miss = std::abs(z.real() - kStep * std::round(z.real() / kStep));
  const bool integer_grid = miss >= 0.25 * kStep;
  const Cd sum = grid_sum(z, integer_grid ? 0.0 : 0.5);

  const Cd grow = 2.0 * pi * xi / kStep;
  Cd corr = 0.0;
  if (grow.real() < 700.0) {
    const Cd expo = std::exp(grow);
    corr = 2.0 / (integer_grid ? 1.0 - expo : 1.0 + expo);
  }
  return std::exp(-xi * xi) * Cd(0.0, kStep / pi) * sum + corr;
}

}  // namespace spdisp
