// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "spdisp/dispersion.hpp"
#include "spdisp/params.hpp"

using namespace spdisp;

TEST_CASE("roots match the frozen anchors") {
  struct Anchor {
    double qt, c0, wt;
  };
  const Anchor anchors[] = {{0.05, 1e-3, 1.013017742633e-02},
                            {0.02, 1e-3, 6.290292199819e-03},
                            {0.05, 1e-2, 3.114307014069e-02},
                            {0.08, 1e-3, 1.385084511342e-02}};
  for (const auto& a : anchors) {
    const DispersionRoot root = find_root(a.qt, a.c0);
    INFO("qt=" << a.qt << " c0=" << a.c0);
    CHECK(root.wt == Catch::Approx(a.wt).epsilon(1e-9));
    CHECK(root.det_residual < 1e-10);
    CHECK(root.nullity_gap >= 10.0);
    CHECK_FALSE(root.crossings.empty());
    // The root sits inside the bracket.
    CHECK(root.wt > a.qt * a.qt);
    CHECK(root.wt < a.qt);
  }
}

TEST_CASE("null vector matches the frozen anchor") {
  const DispersionRoot root = find_root(0.05, 1e-3);
  const double expect[6] = {0.97252894, 1.02242146, 0.49883456,
                            0.99494892, 0.49757467, 1.0};
  // The SVD returns a unit vector of arbitrary phase; renormalize to the
  // last component before comparing.
  const Complex pivot = root.null_vector(5);
  REQUIRE(std::abs(pivot) > 1e-8);
  for (int i = 0; i < 6; ++i) {
    const Complex v = root.null_vector(i) / pivot;
    CHECK(v.real() == Catch::Approx(expect[i]).epsilon(2e-6));
    CHECK(std::abs(v.imag()) < 1e-10);
  }
}

TEST_CASE("determinant is even in the frequency") {
  std::mt19937_64 rng(4711);
  std::uniform_real_distribution<double> qdist(0.02, 0.3);
  for (int i = 0; i < 25; ++i) {
    const double qt = qdist(rng);
    const double wt =
        qt * qt + (qt - qt * qt) * std::uniform_real_distribution<double>(
                                       0.1, 0.9)(rng);
    const Complex lp = lambda_det({qt, Complex(wt, 0.0)}, 1e-3);
    const Complex lm = lambda_det({qt, Complex(-wt, 0.0)}, 1e-3);
    CHECK(std::abs(lp - lm) <= 1e-12 * std::max(1.0, std::abs(lp)));
    // Real in the bracket regime.
    CHECK(std::abs(lp.imag()) <= 1e-12 * std::max(1.0, std::abs(lp)));
  }
}

TEST_CASE("determinant reduces to one at zero coupling") {
  const ScaledPoint s{0.07, Complex(0.02, 0.0)};
  const Complex l = lambda_det(s, 0.0);
  CHECK(std::abs(l - 1.0) < 1e-14);
}

TEST_CASE("LU determinant agrees with cofactor expansion") {
  // On the physical matrix...
  const ScaledPoint s{0.05, Complex(0.01, 0.0)};
  const Matrix6c a = matrix_elements(s, 1e-3);
  Matrix6c ami = a;
  ami -= Matrix6c::Identity();
  const Complex via_lu = lambda_det(s, 1e-3);
  const Complex via_cof = determinant_cofactor(Eigen::MatrixXcd(ami));
  CHECK(std::abs(via_lu - via_cof) <= 1e-12 * std::max(1.0, std::abs(via_lu)));

  // ...and on random complex matrices.
  std::mt19937_64 rng(99);
  std::normal_distribution<double> n01(0.0, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    Eigen::MatrixXcd m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = Complex(n01(rng), n01(rng));
    const Complex lu = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
    const Complex cof = determinant_cofactor(m);
    CHECK(std::abs(lu - cof) <= 1e-11 * std::max(1.0, std::abs(lu)));
  }
}

TEST_CASE("near-resonance evaluations are rejected by default") {
  const double qt = 0.05;
  const ScaledPoint close{qt, Complex(2.0 * qt + 1e-6, 0.0)};
  CHECK_THROWS_AS(matrix_elements(close, 1e-3), std::domain_error);
  MatrixOptions allow;
  allow.allow_near_resonance = true;
  CHECK_NOTHROW(matrix_elements(close, 1e-3, allow));
  // Exactly on the resonance stays forbidden even when opted in.
  const ScaledPoint exact{qt, Complex(2.0 * qt, 0.0)};
  CHECK_THROWS_AS(matrix_elements(exact, 1e-3, allow), std::domain_error);
}

TEST_CASE("determinant stays regular across the entry resonance") {
  const RegularityReport rep = regularity_probe(0.05, 1e-3);
  REQUIRE(rep.eps.size() >= 3);
  REQUIRE(rep.two_sided_diff.size() == rep.eps.size());
  INFO("difference slope: " << rep.slope);
  INFO("two-sided gap: " << rep.two_sided_gap);
  CHECK(rep.slope >= 1.0);
  CHECK(rep.two_sided_gap <= 1e-6);
  CHECK(rep.bound_ratio <= 10.0);
  CHECK(std::isfinite(std::abs(rep.limit_above)));
  CHECK(std::abs(rep.limit_above - rep.limit_below) <=
        1e-6 * std::max(1.0, std::abs(rep.limit_above)));
  // The two-sided difference itself decays monotonically.
  for (std::size_t k = 1; k < rep.two_sided_diff.size(); ++k)
    CHECK(rep.two_sided_diff[k] < rep.two_sided_diff[k - 1]);
}

TEST_CASE("sweep annotates failures instead of aborting") {
  // c0 far too small: the root falls below the bracket, so every point
  // reports not-found but the sweep itself completes.
  const auto rows = dispersion_sweep({0.05, 0.08}, 1e-9);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK_FALSE(row.found);
    CHECK_FALSE(row.status.empty());
    CHECK(row.status != "ok");
  }
  // A healthy sweep reports ok rows in grid order.
  const auto good = dispersion_sweep({0.04, 0.06}, 1e-3);
  REQUIRE(good.size() == 2);
  CHECK(good[0].found);
  CHECK(good[1].found);
  CHECK(good[0].qt == Catch::Approx(0.04));
  CHECK(good[0].root.wt < good[1].root.wt);  // monotone branch
}

TEST_CASE("root finding validates its domain") {
  CHECK_THROWS_AS(find_root(0.0, 1e-3), std::domain_error);
  CHECK_THROWS_AS(find_root(1.0, 1e-3), std::domain_error);
  CHECK_THROWS_AS(find_root(-0.3, 1e-3), std::domain_error);
  CHECK_THROWS_AS(find_root(0.05, 1e-9), NotFoundError);
}
