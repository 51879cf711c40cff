// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Reconstruction of the even scattering amplitude F(z) from the
// Laplace-domain solution.  At a dispersion root the closure matrix is
// singular; its null vector fixes the six boundary values (normalized to
// F(1 - alpha_-) = 1), the residue formulas turn them into pole strengths,
// and inverting the partial fractions term by term gives
//
//   F(z) = sum_{n,sigma} R_n^sigma e^{-(alpha_sigma + 2n)|z|}
//        + sum_n        R_n^slash e^{-(qt + 2n + 1)|z|}.
//
// The profile f0(z) F(z) = e^{-|z|} F(z) is then a null function of the
// half-line integral operator, which integral_residual verifies directly.

#pragma once

#include "spdisp/dispersion.hpp"
#include "spdisp/series.hpp"

namespace spdisp {

struct BoundaryValueSolution {
  BoundaryValues minor_path;  // Cramer solve of the bordered 5x5 system
  BoundaryValues svd_path;    // smallest right-singular vector
  double agreement = 0.0;     // max componentwise relative difference
};

// Solve for the boundary values at a scaled point, by both routes, each
// normalized to f_minus_am = 1.  With `require_agreement` (the default)
// throws std::runtime_error when the two disagree beyond 1e-6 -- away
// from a root the SVD vector is meaningless and the check must be off.
BoundaryValueSolution solve_boundary_values(const ScaledPoint& s, double c0,
                                            const MatrixOptions& opts = {},
                                            bool require_agreement = true);

// Pole/residue data of the reconstructed amplitude.
struct AmplitudeExpansion {
  ScaledPoint point;
  double c0 = 0.0;
  BoundaryValues bv;
  PoleSet poles;
  Residues res;
  int n_max = 0;
};

AmplitudeExpansion build_expansion(const ScaledPoint& s, double c0,
                                   const BoundaryValues& bv,
                                   const SeriesConfig& cfg = {});

// F(z); even in z.
Complex amplitude_eval(const AmplitudeExpansion& exp, double z);

// Leading large-|z| behaviour: the three n = 0 exponentials.
Complex far_field(const AmplitudeExpansion& exp, double z);

// Relative L2 residual of the homogeneous half-line equation
//   (f0 F)(z) + int_0^inf K_e(z, z') (f0 F)(z') dz' = 0
// on a graded quadrature grid.  Vanishes (to quadrature accuracy) only at
// a dispersion root.
double integral_residual(const AmplitudeExpansion& exp, double z_max = 40.0,
                         int n_panels = 50, int order = 8);

}  // namespace spdisp
