// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "spdisp/amplitude.hpp"
#include "spdisp/dispersion.hpp"
#include "spdisp/params.hpp"
#include "spdisp/series.hpp"

using namespace spdisp;

TEST_CASE("first-order coefficients match frozen anchors") {
  const ScaledPoint s{0.05, Complex(0.01, 0.0)};
  SeriesConfig cfg;
  cfg.n_max = 4;
  const SeriesCoefficients c = lambda_coefficients(s, 1e-3, cfg);
  REQUIRE(c.n_max == 4);
  CHECK(c.plus[0] == Complex(1.0, 0.0));
  CHECK(c.minus[0] == Complex(1.0, 0.0));
  CHECK(c.slash[0] == Complex(1.0, 0.0));
  CHECK(c.plus[1].real() ==
        Catch::Approx(-1.259439397438218e-4).epsilon(1e-10));
  CHECK(c.slash[1].real() ==
        Catch::Approx(-1.1474485962037838e-4).epsilon(1e-10));
  CHECK(std::abs(c.plus[1].imag()) < 1e-18);
}

TEST_CASE("coefficients obey the super-factorial decay bounds") {
  const double c0 = 0.05;
  const ScaledPoint s{0.2, Complex(0.1, 0.0)};
  SeriesConfig cfg;
  cfg.n_max = 12;
  const SeriesCoefficients c = lambda_coefficients(s, c0, cfg);
  for (int n = 0; n <= 12; ++n) {
    CHECK(std::abs(c.plus[n]) <= coefficient_bound(c0, n) * (1.0 + 1e-12));
    CHECK(std::abs(c.minus[n]) <= coefficient_bound(c0, n) * (1.0 + 1e-12));
    CHECK(std::abs(c.slash[n]) <=
          slashed_coefficient_bound(c0, n) * (1.0 + 1e-12));
  }
  // The bounds themselves decay super-factorially.
  CHECK(coefficient_bound(c0, 8) < 1e-12 * coefficient_bound(c0, 4));
}

TEST_CASE("default truncation order honors the tail bound") {
  const double c0 = 1e-3;
  const int n = default_order(c0, 1e-14);
  CHECK(n >= 1);
  CHECK(2.0 * std::pow(1.5 * c0, n + 1) /
            std::pow(std::tgamma(n + 2.0), 4.0) <
        1e-14);
  // Tiny coupling needs very few terms; strong coupling needs more.
  CHECK(default_order(1e-6) <= default_order(0.5));
  // The cap is honored.
  CHECK(default_order(1e3, 1e-300, 7) == 7);
}

TEST_CASE("pole families sit where advertised") {
  const ScaledPoint s{0.05, Complex(0.01, 0.0)};
  const PoleSet p = pole_set(s, 3);
  const Complex ap = alpha_sigma(s, +1);
  const Complex am = alpha_sigma(s, -1);
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::abs(p.plus[n] - (-(ap + 2.0 * n + 1.0))) < 1e-15);
    CHECK(std::abs(p.minus[n] - (-(am + 2.0 * n + 1.0))) < 1e-15);
    CHECK(std::abs(p.slash[n] - Complex(-(s.qt + 2.0 * n + 2.0), 0.0)) <
          1e-15);
  }
}

TEST_CASE("partial fractions recover the residues at each pole") {
  // Solve a genuine dispersion point so the boundary values are
  // self-consistent, then probe breve_f near its own poles.
  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);
  const ScaledPoint pt{qt, root.wt};
  const BoundaryValues bv = solve_boundary_values(pt, c0).minor_path;
  const SeriesCoefficients coeffs = lambda_coefficients(pt, c0);
  const PoleSet poles = pole_set(pt, coeffs.n_max);
  const Residues res = residues(pt, c0, bv, coeffs);

  // The plus and minus n = 0 poles sit ~|alpha_+ - alpha_-| ~ wt apart, so
  // the probe radius must stay well inside that separation.
  auto f = [&](Complex sv) { return breve_f(sv, poles, res); };
  const Complex probe_plus = residue_probe(f, poles.plus[0], 1e-4);
  const Complex probe_minus = residue_probe(f, poles.minus[0], 1e-4);
  const Complex probe_slash = residue_probe(f, poles.slash[0], 1e-4);
  CHECK(std::abs(probe_plus - res.plus[0]) <=
        1e-9 * std::max(1.0, std::abs(res.plus[0])));
  CHECK(std::abs(probe_minus - res.minus[0]) <=
        1e-9 * std::max(1.0, std::abs(res.minus[0])));
  CHECK(std::abs(probe_slash - res.slash[0]) <=
        1e-9 * std::max(1.0, std::abs(res.slash[0])));

  // Scaled families: R_n = Lambda_n R_0.
  for (int n = 0; n <= coeffs.n_max; ++n) {
    CHECK(std::abs(res.plus[n] - coeffs.plus[n] * res.base_plus) < 1e-18);
    CHECK(std::abs(res.slash[n] - coeffs.slash[n] * res.base_slash) < 1e-18);
  }
}

TEST_CASE("breve_f rejects evaluation on top of a pole") {
  const ScaledPoint pt{0.05, Complex(0.01, 0.0)};
  const SeriesCoefficients coeffs = lambda_coefficients(pt, 1e-3);
  const PoleSet poles = pole_set(pt, coeffs.n_max);
  BoundaryValues bv;
  bv.f_minus_am = 1.0;
  const Residues res = residues(pt, 1e-3, bv, coeffs);
  CHECK_THROWS_AS(breve_f(poles.slash[0], poles, res), std::domain_error);
  CHECK_NOTHROW(breve_f(poles.slash[0] + Complex(1e-6, 0.0), poles, res));
}

TEST_CASE("functional equation residual vanishes at a dispersion root") {
  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);
  const ScaledPoint pt{qt, root.wt};
  const BoundaryValues bv = solve_boundary_values(pt, c0).minor_path;
  const SeriesCoefficients coeffs = lambda_coefficients(pt, c0);
  double worst = 0.0;
  for (double sv : {-0.8, -0.3, 0.1, 0.6, 1.4, 2.7}) {
    const Complex r = functional_residual(Complex(sv, 0.0), pt, c0, bv,
                                          coeffs);
    worst = std::max(worst, std::abs(r));
  }
  INFO("worst functional-equation residual: " << worst);
  CHECK(worst < 1e-10);
}

TEST_CASE("functional equation residual detects an off-root frequency") {
  // Away from the dispersion curve the same construction cannot satisfy
  // the equation: the residual is orders of magnitude larger.
  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);
  const ScaledPoint off{qt, root.wt * 1.05};
  const BoundaryValues bv = solve_boundary_values(off, c0, {}, false).minor_path;
  const SeriesCoefficients coeffs = lambda_coefficients(off, c0);
  double worst = 0.0;
  for (double sv : {-0.3, 0.6, 1.4}) {
    worst = std::max(
        worst, std::abs(functional_residual(Complex(sv, 0.0), off, c0, bv,
                                             coeffs)));
  }
  CHECK(worst > 1e-8);
}
