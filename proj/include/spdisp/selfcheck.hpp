// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// The shipped verification suite: every guarantee the library makes is
// re-measured here against an independent route (brute-force quadrature,
// discretized operator, frozen high-precision tables, or asymptotic
// bounds), with tolerances pinned in code.  The acceptance binary and the
// CLI `check` subcommand both run these functions.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spdisp {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;   // the quantity compared against the threshold
  double threshold = 0.0;
  std::string detail;      // human-readable summary of what was measured
};

struct CheckOptions {
  std::uint64_t seed = 20260814;
  // Shrunk grids make `check --oracle` fast during development; the
  // defaults reproduce the full acceptance configuration.
  bool quick = false;
};

// Individual suites (names match the printed lines).
CheckResult check_kernel_closed_form(const CheckOptions& = {});
CheckResult check_functional_equation(const CheckOptions& = {});
CheckResult check_determinant_symmetry(const CheckOptions& = {});
CheckResult check_series_vs_fredholm_root(const CheckOptions& = {});
CheckResult check_mode_shape(const CheckOptions& = {});
CheckResult check_integral_residual(const CheckOptions& = {});
CheckResult check_semiclassical_window(const CheckOptions& = {});
CheckResult check_classical_constant(const CheckOptions& = {});
CheckResult check_coefficient_decay(const CheckOptions& = {});
CheckResult check_propagator_identities(const CheckOptions& = {});
CheckResult check_resonance_regularity(const CheckOptions& = {});
CheckResult check_root_nullity(const CheckOptions& = {});

// All twelve suites, in the order above.
std::vector<CheckResult> run_all_checks(const CheckOptions& = {});

// The operator-level cross-validation subset (series vs Fredholm root,
// mode shape, integral residual).
std::vector<CheckResult> run_oracle_checks(const CheckOptions& = {});

// One line per result: "PASS <name> measured=... threshold=... -- detail".
std::string format_check_line(const CheckResult& r);

}  // namespace spdisp
