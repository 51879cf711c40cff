// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Dispersion relation of the even-sector surface mode.  Laplace
// transforming the amplitude equation closes on six boundary values
// F(+-qt), F(1 +- alpha_sigma); the closure matrix A couples them through
// rapidly converging series over the coefficient products.  Modes exist
// where Lambda = det(A - I) vanishes; in the bracket regime
// qt^2 < wt < qt < 1 the determinant is real and changes sign across a
// simple root.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spdisp/series.hpp"

namespace spdisp {

using Matrix6c = Eigen::Matrix<Complex, 6, 6>;
using Vector6c = Eigen::Matrix<Complex, 6, 1>;

struct MatrixOptions {
  SeriesConfig series;
  // Entries carry the overall factor 4 c0 / (4 qt^2 - wt^2); reject
  // evaluations within excl_eps * qt of the resonances wt = +-2 qt unless
  // the caller (the regularity probe) explicitly opts in.
  double excl_eps = 1e-3;
  bool allow_near_resonance = false;
};

// The 6x6 closure matrix A at a scaled point.  Row/column order:
// [ +qt, -qt, (+,+), (-,+), (+,-), (-,-) ] where (vs, sigma) labels the
// boundary value F(1 + vs * alpha_sigma).
Matrix6c matrix_elements(const ScaledPoint& s, double c0,
                         const MatrixOptions& opts = {});

// Lambda = det(A - I) via partial-pivot LU.
Complex lambda_det(const ScaledPoint& s, double c0,
                   const MatrixOptions& opts = {});

// Recursive cofactor expansion; O(n!) reference determinant used only to
// cross-check the LU path in tests.
Complex determinant_cofactor(const Eigen::MatrixXcd& m);

struct RootOptions {
  MatrixOptions matrix;
  // Bracket margins: scan (max(qt^2 (1+delta), qt^2 + edge_gap), qt (1-delta)).
  double delta = 0.02;
  double edge_gap = 1e-3;
  int scan_points = 200;
};

struct DispersionRoot {
  double qt = 0.0;
  double wt = 0.0;           // converged root
  double det_residual = 0.0; // |Lambda(root)|
  double nullity_gap = 0.0;  // sigma_5 / sigma_6 of A - I
  Vector6c null_vector;      // unit right-singular vector of sigma_min
  std::vector<double> crossings;  // every sign change found in the scan
};

// Locate the dispersion root in the bracket.  When several sign changes
// exist the lowest is refined (the physical branch).  Throws
// std::runtime_error when no sign change is found.
DispersionRoot find_root(double qt, double c0, const RootOptions& opts = {});

struct SweepRow {
  double qt = 0.0;
  bool found = false;
  std::string status;  // "ok" or the failure reason
  DispersionRoot root;
};

std::vector<SweepRow> dispersion_sweep(const std::vector<double>& qt_grid,
                                       double c0,
                                       const RootOptions& opts = {});

// Behaviour of Lambda approaching the entry resonance wt -> 2 qt, where
// every matrix element diverges but the determinant stays regular.
// Samples Lambda at 2 qt +- eps0 / 2^k, Richardson-extrapolates each side
// to eps = 0, and measures the decay order of the two-sided difference
// |Lambda(2qt+eps) - Lambda(2qt-eps)|, which vanishes linearly iff the
// determinant extends continuously across the resonance.
struct RegularityReport {
  double qt = 0.0;
  double c0 = 0.0;
  std::vector<double> eps;
  std::vector<Complex> above;   // Lambda(2 qt + eps_k)
  std::vector<Complex> below;   // Lambda(2 qt - eps_k)
  std::vector<double> two_sided_diff;  // |above_k - below_k|
  Complex limit_above = 0.0;
  Complex limit_below = 0.0;
  double slope = 0.0;           // Richardson slope of the difference (>= 1)
  double two_sided_gap = 0.0;   // |L+ - L-| / max(|L+|, |L-|)
  double bound_ratio = 0.0;     // max_k |Lambda| / |Lambda at eps_0|
};

RegularityReport regularity_probe(double qt, double c0, double eps0 = 0.05,
                                  int levels = 6,
                                  const SeriesConfig& series = {});

}  // namespace spdisp
