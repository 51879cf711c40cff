// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Long-wave asymptotics of the dispersion root and the classical
// correspondence.  In the window qt^2 << wt << qt << 1 the root obeys
//
//   wt^2 = 2 c0 qt (1 - (3/4) qt + qt^4 / wt^2 + ...),
//
// whose leading term unscales to the classical surface-mode law
// omega^2 = (e^2 eta0 / eps0) q (with 2 m* = 1).  The corrected law is
// evaluated as a fixed point of the bracketed relation.

#pragma once

#include <string>
#include <vector>

#include "spdisp/dispersion.hpp"
#include "spdisp/params.hpp"

namespace spdisp {

// Classical surface-mode frequency omega(q) = sqrt(coupling * q) in
// unscaled units.
double classical_dispersion(double q, const PhysicalParams& p);

// Leading-order scaled root wt = sqrt(2 c0 qt).
double leading_dispersion(double qt, double c0);

// Corrected scaled root: fixed point of
//   wt^2 = 2 c0 qt (1 - 0.75 qt + qt^4 / wt^2)
// seeded with the leading law; converges for bracket-regime parameters.
double corrected_dispersion(double qt, double c0);

// Expansion building blocks of the matrix entries in the long-wave limit.
struct AsymptoticQuantities {
  double h0 = 0.0;      // 2 c0 / (4 qt^2 - wt^2)
  double h_plus = 0.0;  // (c0/4) / (qt^2 + wt)
  double h_minus = 0.0; // (c0/4) / (qt^2 - wt)
  double p = 0.0;       // 4 qt^3 / (wt^2 - qt^4)
};

AsymptoticQuantities asymptotic_quantities(double qt, double wt, double c0);

// Exact-vs-asymptotic comparison at one wavenumber.
struct SemiclassicalRow {
  double qt = 0.0;
  bool found = false;
  std::string status;
  double wt_exact = 0.0;
  double wt_leading = 0.0;
  double wt_corrected = 0.0;
  double dev_sq_leading = 0.0;   // |wt^2 - 2 c0 qt| / (2 c0 qt)
  double dev_sq_bound = 0.0;     // 1.5 (3 qt / 4 + qt^4 / wt^2)
  double dev_leading = 0.0;      // |wt_exact - wt_leading| / wt_exact
  double dev_corrected = 0.0;    // |wt_exact - wt_corrected| / wt_exact
};

std::vector<SemiclassicalRow> compare_report(const std::vector<double>& qt_grid,
                                             double c0,
                                             const RootOptions& opts = {});

}  // namespace spdisp
