// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// Mittag-Leffler machinery for the Laplace transform F(s) of the even
// scattering amplitude (scaled units, beta = 1).  F is meromorphic with
// three families of simple poles,
//
//   s_n^sigma = -(alpha_sigma + 2n + 1),   n >= 0, sigma = +-1,
//   s_n^slash = -(qt + 2n + 2),            n >= 0,
//
// residues R_n = Lambda_n R_0 with super-factorially decaying products
// Lambda_n, and no entire part.  Everything downstream (the 6x6 matrix,
// the dispersion determinant, the reconstructed amplitude) is assembled
// from these ingredients.

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "spdisp/params.hpp"

namespace spdisp {

// Truncation policy for the coefficient products: explicit n_max wins;
// otherwise the smallest order whose rigorous tail bound drops below
// tail_tol is chosen, capped at n_cap.
struct SeriesConfig {
  int n_max = -1;
  double tail_tol = 1e-14;
  int n_cap = 60;
};

// Rigorous coefficient bounds (proof-side estimates):
// |Lambda_n^sigma| <= (1.5 c0)^n / (n!)^4 and |Lambda_n^slash| <=
// (0.375 c0)^n / (n!)^4 for points of the bracket regime.
double coefficient_bound(double c0, int n);
double slashed_coefficient_bound(double c0, int n);

// Smallest truncation order n with 2 (1.5 c0)^{n+1}/((n+1)!)^4 < tail_tol.
int default_order(double c0, double tail_tol = 1e-14, int n_cap = 60);

// Pole families, n = 0..n_max.
struct PoleSet {
  std::vector<Complex> plus;    // -(alpha_+ + 2n + 1)
  std::vector<Complex> minus;   // -(alpha_- + 2n + 1)
  std::vector<Complex> slash;   // -(qt + 2n + 2)
};

PoleSet pole_set(const ScaledPoint& s, int n_max);

// Coefficient products Lambda_n^sigma, Lambda_n^slash computed iteratively,
// Lambda_0 = 1.
struct SeriesCoefficients {
  std::vector<Complex> plus;
  std::vector<Complex> minus;
  std::vector<Complex> slash;
  int n_max = 0;
  double tail_bound = 0.0;  // bound on the first dropped coefficient
};

SeriesCoefficients lambda_coefficients(const ScaledPoint& s, double c0,
                                       const SeriesConfig& cfg = {});

// The six Laplace-domain boundary values, ordered as the matrix columns:
// F(qt), F(-qt), F(1 + a_+), F(1 - a_+), F(1 + a_-), F(1 - a_-).
struct BoundaryValues {
  Complex f_q = 0.0;
  Complex f_mq = 0.0;
  Complex f_plus_ap = 0.0;
  Complex f_minus_ap = 0.0;
  Complex f_plus_am = 0.0;
  Complex f_minus_am = 0.0;

  std::array<Complex, 6> as_array() const {
    return {f_q, f_mq, f_plus_ap, f_minus_ap, f_plus_am, f_minus_am};
  }
  static BoundaryValues from_array(const std::array<Complex, 6>& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  }
};

// Base residues (n = 0) and the scaled families R_n = Lambda_n R_0.
struct Residues {
  Complex base_plus = 0.0;
  Complex base_minus = 0.0;
  Complex base_slash = 0.0;
  std::vector<Complex> plus;
  std::vector<Complex> minus;
  std::vector<Complex> slash;
};

Residues residues(const ScaledPoint& s, double c0, const BoundaryValues& bv,
                  const SeriesCoefficients& coeffs);

// Partial-fraction evaluation of F(s).  Throws std::domain_error when s
// is within `exclusion` of a pole.
Complex breve_f(Complex s, const PoleSet& poles, const Residues& res,
                double exclusion = 1e-10);

// Residue of a meromorphic function at a simple pole, recovered
// numerically by Richardson extrapolation of r * f(pole + r) over four
// shrinking radii.  Used to cross-check the closed-form residues.
Complex residue_probe(const std::function<Complex(Complex)>& f, Complex pole,
                      double r0 = 1e-2);

// Residual of the five-point functional equation satisfied by F:
//   F(s) - (c0/qt) sum_sigma [ F(qt) T_q + F(1 + a_sigma) T_a
//                              + F(s + 2) T_shift ],
// which must vanish identically in s at a dispersion root.
Complex functional_residual(Complex s, const ScaledPoint& pt, double c0,
                            const BoundaryValues& bv,
                            const SeriesCoefficients& coeffs);

}  // namespace spdisp
