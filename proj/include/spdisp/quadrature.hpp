// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Quadrature helpers shared by the oracle integrators: composite
// Gauss-Legendre rules on user-supplied panels, exponentially graded
// breakpoint generators for half-line integrands with e^{-z/s} tails,
// and a thin adaptive Gauss-Kronrod wrapper for one-off cross-checks.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace spdisp {

// Nodes and weights of a composite quadrature rule, flattened over panels.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Composite Gauss-Legendre rule with `order` points per panel between
// consecutive breakpoints.  Supported orders: 4, 8, 12, 16.
QuadratureRule gauss_legendre_panels(const std::vector<double>& breakpoints,
                                     int order);

// Breakpoints 0 = z_0 < ... < z_n = z_max placed so that panel widths grow
// exponentially with scale `s`: z_k = -s log(1 - u_k (1 - e^{-z_max/s})),
// u_k uniform.  Dense near the origin where bound-state factors peak.
std::vector<double> graded_breakpoints(double z_max, int n_panels,
                                       double scale = 4.0);

// Adaptive Gauss-Kronrod integral of a complex integrand over [a, b] with
// interior breakpoints (kinks) honoured.  Used only as an independent
// cross-check against closed forms, never in production paths.
std::complex<double> integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const std::vector<double>& interior_breaks = {}, double tol = 1e-12);

}  // namespace spdisp
