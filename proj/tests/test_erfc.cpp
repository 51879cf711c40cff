// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spdisp/erfc.hpp"
#include "spdisp/params.hpp"

using namespace spdisp;

namespace {

struct TableRow {
  Complex xi;
  Complex ref;
};

std::vector<TableRow> load_reference() {
  const std::string path =
      std::string(SPDISP_TEST_DATA_DIR) + "/erfc_reference.csv";
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    double v[4];
    std::string cell;
    for (double& x : v) {
      REQUIRE(std::getline(ss, cell, ','));
      x = std::stod(cell);
    }
    rows.push_back({Complex(v[0], v[1]), Complex(v[2], v[3])});
  }
  return rows;
}

}  // namespace

TEST_CASE("complex erfc matches the frozen reference table") {
  const auto rows = load_reference();
  REQUIRE(rows.size() >= 700);
  double worst_core = 0.0, worst_all = 0.0;
  for (const auto& row : rows) {
    const Complex got = complex_erfc(row.xi);
    const double denom = std::max(std::abs(row.ref), 1e-300);
    const double rel = std::abs(got - row.ref) / denom;
    worst_all = std::max(worst_all, rel);
    if (std::abs(row.xi) <= 5.0) worst_core = std::max(worst_core, rel);
  }
  INFO("worst relative error, |xi| <= 5: " << worst_core);
  INFO("worst relative error, all: " << worst_all);
  CHECK(worst_core <= 1e-12);
  CHECK(worst_all <= 5e-12);
}

TEST_CASE("real-axis values agree with std::erfc") {
  for (double x : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0, 4.0}) {
    const Complex got = complex_erfc(Complex(x, 0.0));
    CHECK(got.real() == Catch::Approx(std::erfc(x)).epsilon(1e-13));
    CHECK(std::abs(got.imag()) < 1e-15);
  }
  // A frozen anchor.
  CHECK(complex_erfc(Complex(1.0, 0.0)).real() ==
        Catch::Approx(0.15729920705028513).epsilon(1e-13));
}

TEST_CASE("reflection identity erfc(-xi) = 2 - erfc(xi)") {
  const Complex xs[] = {Complex(0.7, 1.3), Complex(-2.0, 0.4),
                        Complex(1.5, -2.5), Complex(0.1, 0.1)};
  for (const Complex& xi : xs) {
    const Complex a = complex_erfc(xi);
    const Complex b = complex_erfc(-xi);
    CHECK(std::abs(a + b - 2.0) < 1e-13 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("conjugation symmetry erfc(conj xi) = conj erfc(xi)") {
  const Complex xs[] = {Complex(0.3, 2.0), Complex(-1.1, 0.9),
                        Complex(2.2, -1.7)};
  for (const Complex& xi : xs) {
    const Complex a = complex_erfc(std::conj(xi));
    const Complex b = std::conj(complex_erfc(xi));
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("faddeeva_w is consistent with erfc in the upper half-plane") {
  // w(z) = exp(-z^2) erfc(-i z).
  const Complex zs[] = {Complex(0.5, 0.5), Complex(-1.0, 2.0),
                        Complex(3.0, 0.1)};
  for (const Complex& z : zs) {
    const Complex direct = faddeeva_w(z);
    const Complex via = std::exp(-z * z) * complex_erfc(Complex(0, -1) * z);
    CHECK(std::abs(direct - via) <= 1e-12 * std::max(1.0, std::abs(via)));
  }
  CHECK_THROWS_AS(faddeeva_w(Complex(0.0, -0.5)), std::domain_error);
}
