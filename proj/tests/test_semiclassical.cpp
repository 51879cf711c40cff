// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "spdisp/params.hpp"
#include "spdisp/semiclassical.hpp"

using namespace spdisp;

TEST_CASE("classical law is the unscaled leading law, exactly") {
  // omega(q) = sqrt(coupling q) must equal beta^2 wt_leading(q/beta, c0)
  // identically -- the correspondence holds for every parameter choice.
  std::mt19937_64 rng(20260814);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 20; ++i) {
    PhysicalParams p;
    p.beta = u(rng);
    p.eta0 = u(rng);
    p.coupling = u(rng);
    const double q = 0.3 * u(rng);
    const double classical = classical_dispersion(q, p);
    const double quantum =
        p.beta * p.beta * leading_dispersion(q / p.beta, p.c0());
    CHECK(std::abs(classical - quantum) <=
          1e-14 * std::max(1.0, classical));
  }
}

TEST_CASE("leading law value") {
  CHECK(leading_dispersion(0.05, 1e-3) ==
        Catch::Approx(std::sqrt(2e-3 * 0.05)).epsilon(1e-15));
}

TEST_CASE("corrected law satisfies its fixed-point relation") {
  for (double qt : {0.02, 0.05, 0.08}) {
    const double c0 = 1e-3;
    const double wt = corrected_dispersion(qt, c0);
    const double rhs =
        2.0 * c0 * qt * (1.0 - 0.75 * qt + std::pow(qt, 4) / (wt * wt));
    CHECK(wt * wt == Catch::Approx(rhs).epsilon(1e-12));
    // The correction is a small, negative-leaning shift of the leading law.
    const double lead = leading_dispersion(qt, c0);
    CHECK(std::abs(wt - lead) < 0.25 * lead);
  }
}

TEST_CASE("corrected law tracks the exact root better than leading") {
  const auto rows = compare_report({0.02, 0.05, 0.08}, 1e-3);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    INFO("qt=" << row.qt);
    REQUIRE(row.found);
    CHECK(row.dev_corrected < row.dev_leading);
    // The squared deviation from the leading law obeys the window bound.
    CHECK(row.dev_sq_leading <= row.dev_sq_bound);
    // Sanity on magnitudes in this window.
    CHECK(row.dev_leading < 0.1);
    CHECK(row.wt_exact > 0.0);
  }
}

TEST_CASE("compare_report annotates unfound roots") {
  const auto rows = compare_report({0.05}, 1e-9);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].found);
  CHECK_FALSE(rows[0].status.empty());
  // The asymptotic columns are still filled (they do not need the root).
  CHECK(rows[0].wt_leading > 0.0);
}

TEST_CASE("asymptotic quantities match their definitions") {
  const double qt = 0.05, wt = 0.0101, c0 = 1e-3;
  const AsymptoticQuantities a = asymptotic_quantities(qt, wt, c0);
  CHECK(a.h0 ==
        Catch::Approx(2.0 * c0 / (4.0 * qt * qt - wt * wt)).epsilon(1e-14));
  CHECK(a.h_plus == Catch::Approx(0.25 * c0 / (qt * qt + wt)).epsilon(1e-14));
  CHECK(a.h_minus == Catch::Approx(0.25 * c0 / (qt * qt - wt)).epsilon(1e-14));
  CHECK(a.p == Catch::Approx(4.0 * std::pow(qt, 3) /
                             (wt * wt - std::pow(qt, 4)))
                   .epsilon(1e-14));
  // Resonant denominators are rejected.
  CHECK_THROWS_AS(asymptotic_quantities(qt, 2.0 * qt, c0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_quantities(qt, qt * qt, c0), std::domain_error);
}
