// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "spdisp/propagator.hpp"
#include "spdisp/quadrature.hpp"

namespace spdisp {

namespace {

void check_denominators(const Complex& a, double q) {
  // The region formulas divide by alpha - 1, (alpha +- 1)^2 - q^2 and
  // alpha - 1 +- q; reject evaluations within ~1e-12 of those resonances
  // rather than returning catastrophically cancelled values.
  const double tiny = 1e-12;
  if (std::abs(a - 1.0) < tiny)
    throw std::domain_error("script_g: alpha at the bound-state pole");
  if (std::abs(a - 1.0 - q) < tiny || std::abs(a - 1.0 + q) < tiny ||
      std::abs(a + 1.0 - q) < tiny)
    throw std::domain_error("script_g: alpha at a resonant denominator");
}

}  // namespace

Complex script_g(Complex w, double q, double z, double zp) {
  if (!(q > 0.0)) throw std::domain_error("script_g: q must be positive");
  if (z < 0.0) return script_g(w, q, -z, -zp);

  const Complex a = branch_root(q * q - w);
  check_denominators(a, q);
  const Complex am = a - 1.0;
  const Complex ap = a + 1.0;
  const Complex app = ap * ap - q * q;
  const Complex amm = am * am - q * q;

  if (zp >= 0.0 && zp <= z) {
    return 2.0 * q * std::exp(-a * z - q * zp) / (am * app * (am + q)) +
           std::exp(-q * (z - zp) - z) / ((am - q) * (ap + q)) -
           q * std::exp(-a * (z - zp) - zp) / (a * amm) -
           q * std::exp(-a * (z + zp) - zp) / (a * am * app);
  }
  if (zp > z) {
    return 2.0 * q * std::exp(-a * z - q * zp) / (am * app * (am + q)) +
           std::exp(-q * (zp - z) - z) / ((am + q) * (ap - q)) -
           q * std::exp(-a * (zp - z) - zp) / (a * app) -
           q * std::exp(-a * (z + zp) - zp) / (a * am * app);
  }
  // zp <= 0 <= z
  return -2.0 * q * std::exp(-a * z + q * zp) / (am * app * (am - q)) +
         std::exp(-q * (z - zp) - z) / ((am - q) * (ap + q)) -
         q * std::exp(-a * (z - zp) + zp) / (am * app);
}

Complex script_g_oracle(Complex w, double q, double z, double zp,
                        double z_max, double tol) {
  if (!(q > 0.0))
    throw std::domain_error("script_g_oracle: q must be positive");
  auto f = [&](double u) -> Complex {
    return hat_green(w, q, z, u) * std::exp(-std::abs(u)) *
           std::exp(-q * std::abs(u - zp));
  };
  return integrate_complex(f, -z_max, z_max, {0.0, z, zp}, tol);
}

Complex slashed_kernel(const ScaledPoint& s, double c0, double z, double zp) {
  if (!(s.qt > 0.0))
    throw std::domain_error("slashed_kernel: qt must be positive");
  return c0 / s.qt * std::exp(-std::abs(z)) *
         (script_g(-1.0 + s.wt, s.qt, z, zp) +
          script_g(-1.0 - s.wt, s.qt, z, zp));
}

Complex slashed_kernel_even(const ScaledPoint& s, double c0, double z,
                            double zp) {
  if (z < 0.0 || zp < 0.0)
    throw std::domain_error("slashed_kernel_even: needs z, z' >= 0");
  return slashed_kernel(s, c0, z, zp) + slashed_kernel(s, c0, -z, zp);
}

Complex dq_apply(double q, const std::function<Complex(double)>& u, double z,
                 double z_max, double tol) {
  if (!(q > 0.0)) throw std::domain_error("dq_apply: q must be positive");
  auto f = [&](double up) -> Complex {
    return std::exp(-q * std::abs(z - up)) * u(up);
  };
  return integrate_complex(f, -z_max, z_max, {0.0, z}, tol);
}

}  // namespace spdisp
