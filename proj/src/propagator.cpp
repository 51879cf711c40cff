// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/propagator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spdisp/erfc.hpp"
#include "spdisp/quadrature.hpp"

namespace spdisp {

namespace {
const Complex kExpQuarterPos = std::polar(1.0, std::numbers::pi / 4.0);
const Complex kExpQuarterNeg = std::polar(1.0, -std::numbers::pi / 4.0);
}  // namespace

Complex hat_green(Complex w, double k, double z, double zp, double beta) {
  if (!(beta > 0.0))
    throw std::domain_error("hat_green: beta must be positive");
  const Complex alpha = branch_root(k * k - w);
  // Guard the bound-state pole: a denominator below ~1e-13 beta only
  // amplifies rounding noise, so treat it as on-pole.
  if (std::abs(alpha - beta) < 1e-13 * beta)
    throw std::domain_error("hat_green: w at the bound-state pole alpha = beta");
  return (std::exp(-alpha * std::abs(z - zp)) +
          beta / (alpha - beta) * std::exp(-alpha * (std::abs(z) + std::abs(zp)))) /
         (2.0 * alpha);
}

Complex free_green(double t, double r) {
  if (!(t > 0.0)) throw std::domain_error("free_green: t must be positive");
  const double pref = std::pow(4.0 * std::numbers::pi * t, -1.5);
  return kExpQuarterNeg * pref *
         std::exp(Complex(0.0, r * r / (4.0 * t)));
}

Complex td_green(double t, double r_par, double z, double zp, double beta) {
  if (t < 0.0) return 0.0;
  if (t == 0.0)
    throw std::domain_error("td_green: t = 0 is a distributional limit");
  if (!(beta > 0.0))
    throw std::domain_error("td_green: beta must be positive");
  const double dz = z - zp;
  const double r = std::sqrt(r_par * r_par + dz * dz);
  const double big_z = std::abs(z) + std::abs(zp);
  const double st = std::sqrt(t);
  const Complex corr =
      kExpQuarterPos * beta * std::sqrt(std::numbers::pi * t) *
      std::exp(Complex(0.0, -dz * dz / (4.0 * t))) *
      std::exp(Complex(-beta * big_z, beta * beta * t)) *
      complex_erfc(kExpQuarterNeg * big_z / (2.0 * st) -
                   kExpQuarterPos * beta * st);
  return free_green(t, r) * (1.0 + corr);
}

Complex i1_integral(double t, double Z, double beta) {
  if (!(t > 0.0)) throw std::domain_error("i1_integral: t must be positive");
  if (!(beta > 0.0))
    throw std::domain_error("i1_integral: beta must be positive");
  const double st = std::sqrt(t);
  const Complex head = kExpQuarterPos * beta * st;
  const Complex tail = kExpQuarterNeg * Z / (2.0 * st);
  return std::exp(Complex(0.0, beta * beta * t)) / (4.0 * beta) *
         (std::exp(beta * Z) * complex_erfc(head + tail) +
          std::exp(-beta * Z) * complex_erfc(head - tail));
}

Complex i1_integral_quadrature(double t, double Z, double beta, double phi,
                               double tol) {
  if (!(t > 0.0) || !(beta > 0.0))
    throw std::domain_error("i1_integral_quadrature: need t > 0, beta > 0");
  if (!(phi > 0.0) || !(phi < std::numbers::pi / 2.0))
    throw std::domain_error("i1_integral_quadrature: need 0 < phi < pi/2");

  // Along u = e^{-i phi} v the Fresnel factor decays like
  // e^{-sin(2 phi) t v^2} while cos(Z u) grows like e^{|Z| sin(phi) v}.
  // Truncate where the combined exponent is below ~e^{-45}.
  const double s2 = std::sin(2.0 * phi);
  const double s1 = std::sin(phi);
  const double az = std::abs(Z);
  // The envelope peaks at e^{Z^2 tan(phi) / (8 t)}; past ~e^20 the
  // cancellation against that peak costs all double precision, so the
  // rotated-ray contour is only a valid oracle below it.
  const double peak = az * az * std::tan(phi) / (8.0 * t);
  if (peak > 20.0)
    throw std::domain_error(
        "i1_integral_quadrature: Z^2 tan(phi)/(8t) too large; the rotated "
        "ray loses precision (reduce phi or use the closed form)");
  const double v_max =
      (az * s1 + std::sqrt(az * az * s1 * s1 + 4.0 * 45.0 * t * s2)) /
      (2.0 * t * s2);

  const Complex ray = std::polar(1.0, -phi);
  auto integrand = [&](double v) -> Complex {
    const Complex u = ray * v;
    return std::exp(Complex(0.0, -1.0) * u * u * t) * std::cos(Z * u) /
           (u * u + beta * beta) * ray;
  };
  return integrate_complex(integrand, 0.0, v_max, {1.0, 5.0, 20.0}, tol) /
         std::numbers::pi;
}

double electrostatic_kernel(double q, double z) {
  if (!(q > 0.0))
    throw std::domain_error("electrostatic_kernel: q must be positive");
  return std::exp(-q * std::abs(z)) / (2.0 * q);
}

}  // namespace spdisp
