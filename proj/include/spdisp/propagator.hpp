// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Single-particle propagator of the delta-well Hamiltonian, in both the
// frequency-wavevector representation (hat_green) and the time domain
// (td_green), together with the auxiliary half-line Fresnel integral I1
// that the time-domain inversion reduces to.  The closed forms here are
// cross-checked in the tests against ODE residuals, jump conditions, and
// rotated-ray quadrature.

#pragma once

#include <complex>

#include "spdisp/params.hpp"

namespace spdisp {

// Frequency-domain propagator
//   G^(w, k, z, z') = (1/2a) { e^{-a|z-z'|} + b (a-b)^{-1} e^{-a(|z|+|z'|)} },
// a = sqrt(k^2 - w) with Re a > 0.  Throws std::domain_error on the branch
// cut (w real with w >= k^2) and at the bound-state pole a = b.
Complex hat_green(Complex w, double k, double z, double zp, double beta = 1.0);

// Free 3D propagator e^{-i pi/4} (4 pi t)^{-3/2} e^{i r^2/(4 t)}, t > 0.
Complex free_green(double t, double r);

// Time-domain propagator for t > 0 (zero for t < 0 by causality; t = 0 is
// a distributional limit and throws):
//   G = G_f(t, r) { 1 + e^{i pi/4} b sqrt(pi t) e^{-i (z-z')^2/(4t)}
//                       e^{i b^2 t - b(|z|+|z'|)}
//                       erfc( e^{-i pi/4} (|z|+|z'|)/(2 sqrt t)
//                             - e^{i pi/4} b sqrt t ) },
// with r^2 = r_par^2 + (z-z')^2.
Complex td_green(double t, double r_par, double z, double zp,
                 double beta = 1.0);

// Fresnel-damped Lorentzian integral
//   I1(t, Z) = (1/pi) int_0^inf e^{-i u^2 t} cos(Z u) / (u^2 + b^2) du
//            = (e^{i b^2 t}/(4b)) [ e^{ bZ} erfc(e^{i pi/4} b st + e^{-i pi/4} Z/(2 st))
//                                 + e^{-bZ} erfc(e^{i pi/4} b st - e^{-i pi/4} Z/(2 st)) ],
// st = sqrt(t); even in Z; t > 0.
Complex i1_integral(double t, double Z, double beta = 1.0);

// Independent evaluation of I1 by quadrature along the rotated ray
// u = e^{-i phi} v, 0 < phi < pi/2, which renders the Fresnel factor
// Gaussian-decaying and crosses no pole of the integrand.
Complex i1_integral_quadrature(double t, double Z, double beta = 1.0,
                               double phi = 0.78539816339744831,
                               double tol = 1e-13);

// Static electrostatic kernel e^{-q|z|}/(2q): the (z, z') -> z - z' form of
// the in-plane Fourier transform of the 3D Coulomb Green function.
double electrostatic_kernel(double q, double z);

}  // namespace spdisp
