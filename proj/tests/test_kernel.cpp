// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "spdisp/kernel.hpp"
#include "spdisp/params.hpp"
#include "spdisp/propagator.hpp"

using namespace spdisp;

TEST_CASE("script_g matches its frozen anchor") {
  const Complex v = script_g(Complex(-0.98, 0.0), 0.05, 0.4, 0.9);
  CHECK(v.real() == Catch::Approx(-36.477871714153096).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("closed form equals brute-force quadrature across regions") {
  // Sample all sign combinations and orderings of (z, z') so every branch
  // of the piecewise closed form is exercised, at a few energies.
  std::mt19937_64 rng(913);
  std::uniform_real_distribution<double> zdist(-4.0, 4.0);
  const Complex energies[] = {Complex(-0.98, 0.0), Complex(-1.013, 0.0),
                              Complex(-0.9, 0.4)};
  const double q = 0.07;
  double worst = 0.0;
  for (const Complex& w : energies) {
    for (int i = 0; i < 12; ++i) {
      const double z = zdist(rng), zp = zdist(rng);
      const Complex closed = script_g(w, q, z, zp);
      const Complex brute = script_g_oracle(w, q, z, zp);
      const double rel =
          std::abs(closed - brute) / std::max(1.0, std::abs(brute));
      worst = std::max(worst, rel);
    }
  }
  INFO("worst closed-vs-quadrature relative error: " << worst);
  CHECK(worst < 1e-10);
}

TEST_CASE("parity relation holds") {
  const Complex w(-0.95, 0.0);
  const double q = 0.05;
  for (double z : {0.3, -1.2, 2.1}) {
    for (double zp : {0.8, -0.4, -2.5}) {
      CHECK(std::abs(script_g(w, q, z, zp) - script_g(w, q, -z, -zp)) <
            1e-12 * std::max(1.0, std::abs(script_g(w, q, z, zp))));
    }
  }
}

TEST_CASE("script_g rejects resonant denominators and the cut") {
  // alpha = sqrt(q^2 - w); w = q^2 - 1 makes alpha = 1 exactly.
  const double q = 0.05;
  CHECK_THROWS_AS(script_g(Complex(q * q - 1.0, 0.0), q, 0.4, 0.9),
                  std::domain_error);
  // alpha = 1 + q and alpha = 1 - q hit the other factors.
  const double a1 = 1.0 + q, a2 = 1.0 - q;
  CHECK_THROWS_AS(script_g(Complex(q * q - a1 * a1, 0.0), q, 0.4, 0.9),
                  std::domain_error);
  CHECK_THROWS_AS(script_g(Complex(q * q - a2 * a2, 0.0), q, 0.4, 0.9),
                  std::domain_error);
  // On the continuum cut: w real with w >= q^2.
  CHECK_THROWS_AS(script_g(Complex(0.01, 0.0), q, 0.4, 0.9),
                  std::domain_error);
}

TEST_CASE("slashed kernel assembles the two shifted energies") {
  const ScaledPoint s{0.05, Complex(0.01, 0.0)};
  const double c0 = 1e-3, z = 0.7, zp = 1.4;
  const Complex expect =
      (c0 / s.qt) * std::exp(-std::abs(z)) *
      (script_g(-1.0 + s.wt, s.qt, z, zp) + script_g(-1.0 - s.wt, s.qt, z, zp));
  CHECK(std::abs(slashed_kernel(s, c0, z, zp) - expect) <
        1e-13 * std::abs(expect));
}

TEST_CASE("even projection folds the negative half-line") {
  const ScaledPoint s{0.05, Complex(0.01, 0.0)};
  const double c0 = 1e-3;
  for (double z : {0.5, 1.7}) {
    for (double zp : {0.9, 2.4}) {
      const Complex expect =
          slashed_kernel(s, c0, z, zp) + slashed_kernel(s, c0, -z, zp);
      CHECK(std::abs(slashed_kernel_even(s, c0, z, zp) - expect) <
            1e-13 * std::max(1.0, std::abs(expect)));
    }
  }
  CHECK_THROWS_AS(slashed_kernel_even(s, c0, -0.5, 0.9), std::domain_error);
}

TEST_CASE("smoothing map reproduces a known transform") {
  // (D_q e^{-|.|})(z) has the closed form 2 (e^{-q|z|} - q e^{-|z|}) /
  // (1 - q^2) for q != 1 -- this is the electrostatic smoothing of the
  // bound profile.
  const double q = 0.3;
  auto u = [](double zp) { return Complex(std::exp(-std::abs(zp)), 0.0); };
  for (double z : {0.0, 0.8, -1.9}) {
    const double expect = 2.0 *
                          (std::exp(-q * std::abs(z)) -
                           q * std::exp(-std::abs(z))) /
                          (1.0 - q * q);
    const Complex got = dq_apply(q, u, z);
    CHECK(got.real() == Catch::Approx(expect).epsilon(1e-9));
    CHECK(std::abs(got.imag()) < 1e-12);
  }
}

TEST_CASE("script_g composes hat_green with the smoothing profile") {
  // Spot-check the defining integral by composing dq_apply with the
  // propagator directly (independent of script_g_oracle's splits).  At
  // z = 0 every integrand kink coincides with a dq_apply breakpoint.
  const Complex w(-0.97, 0.0);
  const double q = 0.06, zp = 1.1;
  auto f = [&](double u) {
    return hat_green(w, q, 0.0, u) * std::exp(-std::abs(u));
  };
  const Complex via_dq = dq_apply(q, f, zp);
  const Complex closed = script_g(w, q, 0.0, zp);
  CHECK(std::abs(via_dq - closed) < 1e-10 * std::max(1.0, std::abs(closed)));
}
