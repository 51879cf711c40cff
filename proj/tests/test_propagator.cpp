// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "spdisp/params.hpp"
#include "spdisp/propagator.hpp"

using namespace spdisp;

namespace {

// Five-point one-sided first derivative, O(h^4).
template <typename F>
Complex one_sided(F&& f, double x0, double h) {
  return (-25.0 * f(x0) + 48.0 * f(x0 + h) - 36.0 * f(x0 + 2 * h) +
          16.0 * f(x0 + 3 * h) - 3.0 * f(x0 + 4 * h)) /
         (12.0 * h);
}

// Five-point central second derivative, O(h^4).
template <typename F>
Complex second_central(F&& f, double x0, double h) {
  return (-f(x0 - 2 * h) + 16.0 * f(x0 - h) - 30.0 * f(x0) +
          16.0 * f(x0 + h) - f(x0 + 2 * h)) /
         (12.0 * h * h);
}

}  // namespace

TEST_CASE("hat_green solves the homogeneous equation away from sources") {
  // (-d^2/dz^2 + k^2 - w) G = 0 for z not in {0, z'}.
  const Complex w(-0.7, 0.3);
  const double k = 0.4, zp = 0.9, beta = 1.0;
  auto g = [&](double z) { return hat_green(w, k, z, zp, beta); };
  for (double z : {-1.5, 0.35, 0.62, 1.4, 2.8}) {
    const Complex lhs = -second_central(g, z, 1e-2) +
                        (k * k - w) * hat_green(w, k, z, zp, beta);
    CHECK(std::abs(lhs) < 1e-6 * std::abs(hat_green(w, k, z, zp, beta)) +
                              1e-10);
  }
}

TEST_CASE("hat_green jump conditions at the source and at the well") {
  const Complex w(-0.7, 0.3);
  const double k = 0.4, zp = 0.9, beta = 1.0, h = 1e-3;
  auto g = [&](double z) { return hat_green(w, k, z, zp, beta); };

  // Unit delta source: G'(zp+) - G'(zp-) = -1.
  auto gneg = [&](double z) { return g(2.0 * zp - z); };  // mirrored
  const Complex dplus = one_sided(g, zp, h);
  const Complex dminus = -one_sided(gneg, zp, h);
  CHECK(std::abs(dplus - dminus + 1.0) < 1e-8);

  // Delta well at z = 0: G'(0+) - G'(0-) = -2 beta G(0, zp).
  auto gneg0 = [&](double z) { return g(-z); };
  const Complex d0p = one_sided(g, 0.0, h);
  const Complex d0m = -one_sided(gneg0, 0.0, h);
  const Complex expected = -2.0 * beta * g(0.0);
  CHECK(std::abs(d0p - d0m - expected) < 1e-8);
}

TEST_CASE("hat_green is symmetric and decays at infinity") {
  const Complex w(-0.5, 0.2);
  const double k = 0.3;
  CHECK(std::abs(hat_green(w, k, 0.7, -1.2) - hat_green(w, k, -1.2, 0.7)) <
        1e-15);
  CHECK(std::abs(hat_green(w, k, 30.0, 0.5)) < 1e-6);
}

TEST_CASE("hat_green rejects the branch cut and the pole") {
  // Real w at or above k^2 sits on the continuum cut (k = 0.5 keeps
  // k^2 = 0.25 exactly representable).
  CHECK_THROWS_AS(hat_green(Complex(0.3, 0.0), 0.5, 0.1, 0.2),
                  std::domain_error);
  CHECK_THROWS_AS(hat_green(Complex(0.25, 0.0), 0.5, 0.1, 0.2),
                  std::domain_error);
  // a == beta is the bound-state pole: k^2 - w = beta^2.
  CHECK_THROWS_AS(hat_green(Complex(-0.75, 0.0), 0.5, 0.1, 0.2, 1.0),
                  std::domain_error);
  // Just below the cut is fine.
  CHECK_NOTHROW(hat_green(Complex(0.2499, 0.0), 0.5, 0.1, 0.2));
}

TEST_CASE("I1 closed form agrees with rotated-ray quadrature") {
  struct Case {
    double t, Z, beta;
  };
  const Case cases[] = {{0.7, 1.3, 1.0}, {0.3, 0.2, 0.8}, {2.0, 3.0, 1.2},
                        {1.0, 0.0, 1.0}, {0.5, 2.0, 1.0}};
  for (const auto& c : cases) {
    const Complex closed = i1_integral(c.t, c.Z, c.beta);
    const Complex quad = i1_integral_quadrature(c.t, c.Z, c.beta);
    INFO("t=" << c.t << " Z=" << c.Z << " beta=" << c.beta);
    CHECK(std::abs(closed - quad) <=
          1e-10 * std::max(1.0, std::abs(closed)));
  }
  // Outside the contour's validity window the oracle refuses to answer
  // rather than returning cancellation noise.
  CHECK_THROWS_AS(i1_integral_quadrature(0.05, 4.0, 1.0), std::domain_error);
}

TEST_CASE("I1 anchor value and symmetry in Z") {
  const Complex v = i1_integral(0.7, 1.3, 1.0);
  CHECK(v.real() == Catch::Approx(0.21917373174978590).epsilon(1e-12));
  CHECK(v.imag() == Catch::Approx(-0.022015112160972222).epsilon(1e-10));
  const Complex a = i1_integral(0.9, 2.3, 1.1);
  const Complex b = i1_integral(0.9, -2.3, 1.1);
  CHECK(std::abs(a - b) < 1e-15);
}

TEST_CASE("rotated-ray quadrature is independent of the rotation angle") {
  const Complex a = i1_integral_quadrature(0.7, 1.3, 1.0, 0.35);
  const Complex b = i1_integral_quadrature(0.7, 1.3, 1.0, 0.78539816339744831);
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("td_green matches its frozen anchor") {
  const Complex v = td_green(1.0, 0.3, 0.5, 0.5, 1.0);
  CHECK(v.real() == Catch::Approx(0.014137779153812253).epsilon(1e-12));
  CHECK(v.imag() == Catch::Approx(0.021361386319281990).epsilon(1e-12));
}

TEST_CASE("td_green reduces to the free propagator as the well vanishes") {
  const double t = 0.8, r_par = 0.4, z = 0.6, zp = -0.3;
  const double dz = z - zp;
  const double r = std::sqrt(r_par * r_par + dz * dz);
  const Complex weak = td_green(t, r_par, z, zp, 1e-14);
  const Complex free = free_green(t, r);
  CHECK(std::abs(weak - free) <= 1e-10 * std::abs(free));
}

TEST_CASE("td_green causality and domain") {
  CHECK(td_green(-0.5, 0.3, 0.5, 0.5) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(td_green(0.0, 0.3, 0.5, 0.5), std::domain_error);
}

TEST_CASE("free propagator normalizes as a Gaussian in modulus") {
  // |G_f| = (4 pi t)^{-3/2} independent of r.
  const double t = 0.37;
  const double mag = std::pow(4.0 * M_PI * t, -1.5);
  CHECK(std::abs(free_green(t, 0.0)) == Catch::Approx(mag).epsilon(1e-14));
  CHECK(std::abs(free_green(t, 2.9)) == Catch::Approx(mag).epsilon(1e-14));
}

TEST_CASE("electrostatic kernel value and scaling") {
  CHECK(electrostatic_kernel(0.5, 2.0) ==
        Catch::Approx(std::exp(-1.0) / 1.0).epsilon(1e-14));
  CHECK(electrostatic_kernel(0.5, -2.0) ==
        Catch::Approx(electrostatic_kernel(0.5, 2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(electrostatic_kernel(0.0, 1.0), std::domain_error);
}
