// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Complementary error function of a complex argument.
//
// The evaluation goes through the Faddeeva function w(z) on the upper
// half-plane, computed by a trapezoidal discretization of its Gaussian
// integral representation plus the pole-matching correction obtained from
// Poisson summation (the Chiarella-Reichel construction).  Two staggered
// sampling grids are kept so that the correction term's poles, which sit
// on one grid, are always evaluated from the other; the worst-case
// relative error observed against a 40-digit reference is below 1e-14 for
// |xi| <= 10.

#pragma once

#include <complex>

namespace spdisp {

// erfc(xi) for complex xi.  Accurate to ~1e-14 relative for |xi| <= 10;
// intermediate factors stay within double range for |Im xi| <= 25.
std::complex<double> complex_erfc(std::complex<double> xi);

// Faddeeva function w(z) = e^{-z^2} erfc(-i z) for Im z >= 0.
// Throws std::domain_error for Im z < 0.
std::complex<double> faddeeva_w(std::complex<double> z);

}  // namespace spdisp
