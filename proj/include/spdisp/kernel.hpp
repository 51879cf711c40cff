// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Composed interaction kernel of the linearized (Hartree) problem in the
// scaled variables (beta = 1).  The building block is
//
//   script_g(w, q, z; z') = int_R hat_green(w, q, z; u) e^{-|u|}
//                                 e^{-q |u - z'|} du,
//
// i.e. the frequency propagator smeared against the bound-state profile
// and the electrostatic kernel.  It evaluates in closed form, piecewise
// over three regions of the (z, z') plane, with the remaining half-plane
// reached through the parity relation script_g(-z; -z') = script_g(z; z').
//
// The slashed kernel combines script_g at the two shifted energies
// w = -1 +- wt into the kernel of the homogeneous amplitude equation.

#pragma once

#include <functional>

#include "spdisp/params.hpp"

namespace spdisp {

// Closed-form script_g at complex energy w (scaled units, beta = 1).
// Throws std::domain_error on the branch cut of alpha = sqrt(q^2 - w) and
// at resonant denominators (alpha near 1, alpha near 1 +- q).
Complex script_g(Complex w, double q, double z, double zp);

// Brute-force quadrature of the defining integral; independent of the
// closed form.  Splits at the integrand kinks u in {0, z, z'}.
Complex script_g_oracle(Complex w, double q, double z, double zp,
                        double z_max = 45.0, double tol = 1e-13);

// Slashed kernel (c0/qt) e^{-|z|} [ script_g(-1 + wt) + script_g(-1 - wt) ]
// evaluated at (z; z').
Complex slashed_kernel(const ScaledPoint& s, double c0, double z, double zp);

// Even projection onto the half-line z, z' >= 0:
//   K_e(z, z') = slashed(z; z') + slashed(-z; z').
// This is the kernel whose Fredholm determinant vanishes on the
// dispersion curve.
Complex slashed_kernel_even(const ScaledPoint& s, double c0, double z,
                            double zp);

// Smoothing map (D_q u)(z) = int_R e^{-q|z-z'|} u(z') dz', evaluated by
// adaptive quadrature; test infrastructure for composition identities.
Complex dq_apply(double q, const std::function<Complex(double)>& u, double z,
                 double z_max = 45.0, double tol = 1e-12);

}  // namespace spdisp
