// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter handling for a charged particle bound to a plane by an
// attractive delta well, interacting through a linearized Hartree
// (Coulomb) term.  Natural units hbar = 1 = 2 m* throughout: energies
// carry dimension 1/length^2 and the well strength beta is an inverse
// length.  All spectral quantities are computed in the scaled variables
//   qt = q / beta,   wt = omega / beta^2,
// in which the well strength drops out and a single dimensionless
// coupling c0 = e^2 eta0 / (2 eps0 beta^3) remains.

#pragma once

#include <complex>
#include <stdexcept>

namespace spdisp {

using Complex = std::complex<double>;

// A search that completed without locating its target (no determinant
// sign change, no singular-value dip).  Distinct from domain errors so
// callers can map it to a dedicated exit status.
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Physical inputs.  `coupling` is the combination e^2 eta0 / eps0 (an
// energy times length, i.e. 1/length^3 in natural units); `eta0` is the
// areal density of the layer and is kept separately only so that callers
// can report it back.
struct PhysicalParams {
  double beta = 1.0;
  double eta0 = 1.0;
  double coupling = 0.0;

  // Dimensionless coupling strength; the only parameter the scaled
  // problem depends on.
  double c0() const { return coupling / (2.0 * beta * beta * beta); }

  void validate() const;
};

// Derived length scales: the binding length of the well and the Coulomb
// length of the layer.  They satisfy c0 = (2 l_b / l_C)^3.
struct LengthScales {
  double l_b = 0.0;
  double l_c = 0.0;
};

LengthScales length_scales(const PhysicalParams& p);

// A point of the scaled dispersion plane.  `wt` is complex so that the
// analytic continuations used by the kernel and series modules type-check;
// on the physical sheet it is real.
struct ScaledPoint {
  double qt = 0.0;
  Complex wt = 0.0;
};

ScaledPoint to_scaled(const PhysicalParams& p, double q, Complex omega);

// Inverse map; returns (q, omega).
struct PhysicalPoint {
  double q = 0.0;
  Complex omega = 0.0;
};

PhysicalPoint from_scaled(const PhysicalParams& p, const ScaledPoint& s);

// Branch stencil alpha_sigma = sqrt(1 + qt^2 - sigma*wt), sigma = +-1,
// principal branch with Re alpha > 0.  Throws std::domain_error when the
// argument lands on the branch cut (negative real axis including 0),
// where no side can be preferred.
Complex alpha_sigma(const ScaledPoint& s, int sigma);

// Same stencil for the unscaled propagator, alpha = sqrt(k^2 - w)/beta
// scaling left to the caller.
Complex branch_root(Complex arg);

// Thresholds delimiting the long-wave window where the semiclassical
// expansion is quantitatively trustworthy.
struct SemiclassicalThresholds {
  double qt_max = 0.1;
  double wt_over_qt_max = 0.2;
  double qt2_over_wt_max = 0.2;
  double c0_max = 0.01;
};

// Regime diagnosis for a (scaled) point.  `in_bracket` reports the strict
// ordering qt^2 < |wt| < qt < 1 under which the dispersion root is
// bracketed; `semiclassical` additionally checks the thresholds above.
struct RegimeReport {
  bool in_bracket = false;
  bool semiclassical = false;
  double qt = 0.0;
  double abs_wt = 0.0;
  double wt_over_qt = 0.0;
  double qt2_over_wt = 0.0;
  double c0 = 0.0;
};

RegimeReport validate_regime(const ScaledPoint& s, const PhysicalParams& p,
                             const SemiclassicalThresholds& thresholds = {});

}  // namespace spdisp
