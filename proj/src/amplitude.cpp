// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/amplitude.hpp"

#include <cmath>
#include <stdexcept>

#include "spdisp/kernel.hpp"
#include "spdisp/quadrature.hpp"

namespace spdisp {

namespace {

// Null vector of B through the bordered minor system: pin component p to
// 1, solve B with row and column p deleted against minus the p-th column.
// Returns false when that 5x5 block is numerically singular.
bool minor_null_vector(const Matrix6c& B, int p, Vector6c& v) {
  Eigen::Matrix<Complex, 5, 5> M;
  Eigen::Matrix<Complex, 5, 1> rhs;
  int rr = 0;
  for (int r = 0; r < 6; ++r) {
    if (r == p) continue;
    int cc = 0;
    for (int c = 0; c < 6; ++c) {
      if (c == p) continue;
      M(rr, cc++) = B(r, c);
    }
    rhs(rr++) = -B(r, p);
  }
  Eigen::FullPivLU<Eigen::Matrix<Complex, 5, 5>> lu(M);
  if (!lu.isInvertible()) return false;
  const Eigen::Matrix<Complex, 5, 1> x = lu.solve(rhs);
  int k = 0;
  for (int r = 0; r < 6; ++r) v(r) = r == p ? Complex(1.0) : x(k++);
  return true;
}

BoundaryValues normalized(const Vector6c& v) {
  const Complex pivot = v(5);
  if (std::abs(pivot) < 1e-12 * v.norm())
    throw std::runtime_error(
        "solve_boundary_values: cannot normalize, F(1 - alpha_-) ~ 0");
  std::array<Complex, 6> a;
  for (int i = 0; i < 6; ++i) a[i] = v(i) / pivot;
  return BoundaryValues::from_array(a);
}

}  // namespace

BoundaryValueSolution solve_boundary_values(const ScaledPoint& s, double c0,
                                            const MatrixOptions& opts,
                                            bool require_agreement) {
  const Matrix6c B = matrix_elements(s, c0, opts) - Matrix6c::Identity();

  Vector6c vm;
  bool ok = minor_null_vector(B, 5, vm);
  for (int p = 4; !ok && p >= 0; --p) ok = minor_null_vector(B, p, vm);
  if (!ok)
    throw std::runtime_error(
        "solve_boundary_values: every bordered minor is singular");

  Eigen::JacobiSVD<Matrix6c> svd(B, Eigen::ComputeFullV);
  const Vector6c vs = svd.matrixV().col(5);

  BoundaryValueSolution out;
  out.minor_path = normalized(vm);
  out.svd_path = normalized(vs);

  const auto am = out.minor_path.as_array();
  const auto as = out.svd_path.as_array();
  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    worst = std::max(worst,
                     std::abs(am[i] - as[i]) / std::max(std::abs(am[i]), 1.0));
  out.agreement = worst;
  if (require_agreement && worst > 1e-6)
    throw std::runtime_error(
        "solve_boundary_values: minor and SVD null vectors disagree; "
        "point is not a dispersion root");
  return out;
}

AmplitudeExpansion build_expansion(const ScaledPoint& s, double c0,
                                   const BoundaryValues& bv,
                                   const SeriesConfig& cfg) {
  AmplitudeExpansion e;
  e.point = s;
  e.c0 = c0;
  e.bv = bv;
  const SeriesCoefficients coeffs = lambda_coefficients(s, c0, cfg);
  e.n_max = coeffs.n_max;
  e.poles = pole_set(s, coeffs.n_max);
  e.res = residues(s, c0, bv, coeffs);
  return e;
}

Complex amplitude_eval(const AmplitudeExpansion& exp, double z) {
  const double az = std::abs(z);
  // Pole at s_n corresponds to the profile term e^{(s_n + 1)|z|} of F
  // (one unit shifted by the bound-state factor carried by f0 F).
  auto accumulate = [&](const std::vector<Complex>& p,
                        const std::vector<Complex>& r) {
    Complex acc = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n)
      acc += r[n] * std::exp((p[n] + 1.0) * az);
    return acc;
  };
  return accumulate(exp.poles.plus, exp.res.plus) +
         accumulate(exp.poles.minus, exp.res.minus) +
         accumulate(exp.poles.slash, exp.res.slash);
}

Complex far_field(const AmplitudeExpansion& exp, double z) {
  const double az = std::abs(z);
  return exp.res.plus[0] * std::exp((exp.poles.plus[0] + 1.0) * az) +
         exp.res.minus[0] * std::exp((exp.poles.minus[0] + 1.0) * az) +
         exp.res.slash[0] * std::exp((exp.poles.slash[0] + 1.0) * az);
}

double integral_residual(const AmplitudeExpansion& exp, double z_max,
                         int n_panels, int order) {
  const QuadratureRule rule =
      gauss_legendre_panels(graded_breakpoints(z_max, n_panels), order);
  const std::size_t n = rule.nodes.size();

  std::vector<Complex> profile(n);  // (f0 F)(z_j)
  for (std::size_t j = 0; j < n; ++j)
    profile[j] =
        std::exp(-rule.nodes[j]) * amplitude_eval(exp, rule.nodes[j]);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = profile[i];
    for (std::size_t j = 0; j < n; ++j)
      acc += rule.weights[j] *
             slashed_kernel_even(exp.point, exp.c0, rule.nodes[i],
                                 rule.nodes[j]) *
             profile[j];
    num += rule.weights[i] * std::norm(acc);
    den += rule.weights[i] * std::norm(profile[i]);
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

}  // namespace spdisp
