// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent Fredholm cross-check of the series pipeline.  The
// homogeneous amplitude equation on the half line,
//
//   (f0 F)(z) + int_0^inf K_e(z, z') (f0 F)(z') dz' = 0,
//
// is discretized by Nystrom collocation on a graded composite
// Gauss-Legendre grid; surface modes appear as a collapse of the smallest
// singular value of I + K as wt sweeps the bracket.
//
// Two discretizations of the same operator are assembled side by side:
//
//  * `nystrom`   -- I + W^{1/2} K_e W^{1/2} with the closed-form kernel
//                   collocated at the nodes.  The pointwise kernel is not
//                   symmetric (the bound-state weight sits on one side),
//                   so neither is this matrix; its spectrum is still real.
//  * `symmetric` -- an exactly symmetric matrix similar to the same
//                   operator, built from the factorization
//                   K = c F0 S F0 E of the kernel into the propagator sum
//                   S, the electrostatic kernel E (both symmetric), and
//                   the bound-state profile F0: with Es = W^{1/2} E W^{1/2}
//                   and Bs = F0 W^{1/2} S W^{1/2} F0,
//                   M = I + c Es^{1/2} Bs Es^{1/2} is symmetric by
//                   construction and isospectral to I + K.  It is also an
//                   independent route: it never touches the closed-form
//                   composed kernel, only the bare propagator.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spdisp/params.hpp"

namespace spdisp {

struct GridSpec {
  double z_max = 40.0;
  int n_points = 400;       // n_panels * order
  int order = 8;            // Gauss-Legendre points per panel
  double grading_scale = 4.0;

  int n_panels() const;
  void validate() const;    // n_points >= 50, z_max >= 20, divisibility
};

struct FredholmOperator {
  ScaledPoint point;
  double c0 = 0.0;
  GridSpec grid;
  std::vector<double> nodes;
  std::vector<double> weights;
  Eigen::MatrixXd nystrom;    // I + W^{1/2} K_e W^{1/2}
  Eigen::MatrixXd symmetric;  // I + c Es^{1/2} Bs Es^{1/2}

  // Smallest singular value of the Nystrom matrix and the corresponding
  // profile values (f0 F)(z_i), recovered as W^{-1/2} times the right
  // singular vector.
  double sigma_min() const;
  Eigen::VectorXd null_profile() const;

  // Smallest |eigenvalue| of the symmetric matrix (for a symmetric matrix
  // this equals its smallest singular value).
  double symmetric_sigma_min() const;
};

// Assemble both discretizations at a real-frequency point of the bracket.
FredholmOperator build_operator(const ScaledPoint& s, double c0,
                                const GridSpec& grid = {});

struct OracleOptions {
  GridSpec grid;
  int scan_points = 48;
  // Optional scan-window override (used by refinement tests to avoid a
  // full re-scan); defaults to the standard bracket margins.
  double wt_lo = -1.0;
  double wt_hi = -1.0;
  // A dip must undercut the scan median by this factor to count as found.
  double dip_factor = 0.1;
  double golden_tol = 1e-12;
};

struct OracleRoot {
  double qt = 0.0;
  double wt = 0.0;
  double sigma_min = 0.0;       // at the refined root (Nystrom matrix)
  double operator_norm = 0.0;   // largest singular value at the root
  double symmetric_sigma = 0.0; // smallest |eig| of the symmetric matrix
  Eigen::VectorXd eigenfunction;  // profile values (f0 F)(z_i), unit norm
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scan_wt;     // scan trace
  std::vector<double> scan_sigma;
};

// Scan sigma_min over the bracket, refine the dip by golden-section
// search.  Throws NotFoundError (with the scan trace in the message) when
// no pronounced dip exists.
OracleRoot oracle_root(double qt, double c0, const OracleOptions& opts = {});

}  // namespace spdisp
