// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "spdisp/amplitude.hpp"
#include "spdisp/dispersion.hpp"
#include "spdisp/erfc.hpp"
#include "spdisp/kernel.hpp"
#include "spdisp/oracle.hpp"
#include "spdisp/propagator.hpp"
#include "spdisp/semiclassical.hpp"
#include "spdisp/series.hpp"

#include "spdisp/erfc_reference.inc"

namespace spdisp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// Draw a bracket-regime sample qt^2 < wt < qt.
ScaledPoint random_regime_point(std::mt19937_64& rng, double q_lo,
                                double q_hi) {
  std::uniform_real_distribution<double> uq(q_lo, q_hi);
  const double qt = uq(rng);
  std::uniform_real_distribution<double> uw(qt * qt * 1.05, qt * 0.95);
  return {qt, uw(rng)};
}

// Fourth-order one-sided derivative staying on one smooth piece.
template <typename F>
auto one_sided_derivative(const F& f, double x0, double h) {
  return (-25.0 * f(x0) + 48.0 * f(x0 + h) - 36.0 * f(x0 + 2.0 * h) +
          16.0 * f(x0 + 3.0 * h) - 3.0 * f(x0 + 4.0 * h)) /
         (12.0 * h);
}

}  // namespace

CheckResult check_kernel_closed_form(const CheckOptions& opts) {
  CheckResult r;
  r.name = "kernel-closed-form-vs-quadrature";
  r.threshold = 1e-8;
  const auto t0 = Clock::now();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uz(-5.0, 5.0);
  std::uniform_real_distribution<double> usign(0.0, 1.0);
  const int samples = opts.quick ? 40 : 200;

  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ScaledPoint pt = random_regime_point(rng, 0.01, 0.5);
    const double sign = usign(rng) < 0.5 ? -1.0 : 1.0;
    const Complex w = -1.0 + sign * pt.wt;
    const double z = uz(rng), zp = uz(rng);
    const Complex closed = script_g(w, pt.qt, z, zp);
    const Complex oracle = script_g_oracle(w, pt.qt, z, zp);
    worst = std::max(worst, std::abs(closed - oracle) /
                                std::max(std::abs(oracle), 1e-30));
  }
  const double elapsed = seconds_since(t0);
  r.measured = worst;
  r.pass = worst <= r.threshold && elapsed <= 10.0;
  r.detail = "worst relative error over " + std::to_string(samples) +
             " random regime samples; " + fmt(elapsed) + " s (limit 10 s)";
  return r;
}

CheckResult check_functional_equation(const CheckOptions& opts) {
  CheckResult r;
  r.name = "functional-equation-residual";
  r.threshold = 1e-9;

  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);
  const ScaledPoint pt{qt, root.wt};
  const BoundaryValues bv = solve_boundary_values(pt, c0).minor_path;
  const SeriesCoefficients coeffs = lambda_coefficients(pt, c0);
  const PoleSet poles = pole_set(pt, coeffs.n_max);
  const Residues res = residues(pt, c0, bv, coeffs);

  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> us(-0.99, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex s = us(rng);
    const Complex resid = functional_residual(s, pt, c0, bv, coeffs);
    const double scale = std::abs(breve_f(s, poles, res));
    worst = std::max(worst, std::abs(resid) / std::max(scale, 1e-30));
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "worst relative residual at 20 random s with Re s > -1, at the "
             "converged root (qt=0.05, c0=1e-3)";
  return r;
}

CheckResult check_determinant_symmetry(const CheckOptions& opts) {
  CheckResult r;
  r.name = "determinant-frequency-symmetry";
  r.threshold = 1e-12;

  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> uc(-4.0, -2.0);
  const int samples = opts.quick ? 20 : 100;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ScaledPoint pt = random_regime_point(rng, 0.02, 0.3);
    const double c0 = std::pow(10.0, uc(rng));
    const Complex fwd = lambda_det({pt.qt, pt.wt}, c0);
    const Complex bwd = lambda_det({pt.qt, -pt.wt}, c0);
    worst = std::max(worst,
                     std::abs(fwd - bwd) / std::max(std::abs(fwd), 1e-30));
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "worst |det(wt) - det(-wt)| / |det| over " +
             std::to_string(samples) + " random regime points";
  return r;
}

CheckResult check_series_vs_fredholm_root(const CheckOptions& opts) {
  CheckResult r;
  r.name = "series-vs-fredholm-root";
  r.threshold = 1e-3;

  OracleOptions oopts;
  if (opts.quick) {
    oopts.grid.n_points = 160;
    oopts.scan_points = 24;
  }
  const std::pair<double, double> pts[] = {
      {0.02, 1e-3}, {0.05, 1e-3}, {0.05, 1e-2}};
  double worst = 0.0, slowest = 0.0;
  std::ostringstream det;
  for (const auto& [qt, c0] : pts) {
    const auto t0 = Clock::now();
    const double series_wt = find_root(qt, c0).wt;
    const OracleRoot oracle = oracle_root(qt, c0, oopts);
    const double elapsed = seconds_since(t0);
    const double rel = std::abs(oracle.wt - series_wt) / series_wt;
    worst = std::max(worst, rel);
    slowest = std::max(slowest, elapsed);
    det << " (qt=" << qt << ", c0=" << c0 << "): rel=" << fmt(rel)
        << ", " << fmt(elapsed) << " s;";
  }
  r.measured = worst;
  r.pass = worst <= r.threshold && slowest <= 60.0;
  r.detail = "series vs discretized-operator root;" + det.str() +
             " per-point limit 60 s";
  return r;
}

CheckResult check_mode_shape(const CheckOptions& opts) {
  CheckResult r;
  r.name = "mode-shape-agreement";
  r.threshold = 0.9999;

  OracleOptions oopts;
  if (opts.quick) {
    oopts.grid.n_points = 160;
    oopts.scan_points = 24;
  }
  const double qt = 0.05, c0 = 1e-3;
  const OracleRoot oracle = oracle_root(qt, c0, oopts);

  const ScaledPoint pt{qt, oracle.wt};
  const BoundaryValues bv =
      solve_boundary_values(pt, c0, {}, /*require_agreement=*/false)
          .minor_path;
  const AmplitudeExpansion exp = build_expansion(pt, c0, bv);

  const Eigen::Index n = oracle.eigenfunction.size();
  Eigen::VectorXd series(n);
  for (Eigen::Index i = 0; i < n; ++i)
    series(i) = std::exp(-oracle.nodes[i]) *
                amplitude_eval(exp, oracle.nodes[i]).real();
  series.normalize();
  const double cosine = std::abs(series.dot(oracle.eigenfunction));
  r.measured = cosine;
  r.pass = cosine >= r.threshold;
  r.detail = "cosine similarity of normalized oracle eigenfunction vs "
             "reconstructed profile on the oracle grid (qt=0.05, c0=1e-3)";
  return r;
}

CheckResult check_integral_residual(const CheckOptions&) {
  CheckResult r;
  r.name = "integral-residual-and-detuning";
  r.threshold = 1e-6;

  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);

  const ScaledPoint at{qt, root.wt};
  const BoundaryValues bv = solve_boundary_values(at, c0).minor_path;
  const double res_at = integral_residual(build_expansion(at, c0, bv));

  const ScaledPoint off{qt, 1.05 * root.wt};
  const BoundaryValues bv_off =
      solve_boundary_values(off, c0, {}, /*require_agreement=*/false)
          .minor_path;
  const double res_off = integral_residual(build_expansion(off, c0, bv_off));

  r.measured = res_at;
  r.pass = res_at <= r.threshold && res_off >= 10.0 * res_at;
  r.detail = "relative half-line residual at the root; detuned by 5%: " +
             fmt(res_off) + " (" + fmt(res_off / std::max(res_at, 1e-300)) +
             "x, required >= 10x)";
  return r;
}

CheckResult check_semiclassical_window(const CheckOptions&) {
  CheckResult r;
  r.name = "semiclassical-window";
  r.threshold = 1.0;

  const double c0 = 1e-3;
  const auto rows = compare_report({0.02, 0.05, 0.08}, c0);
  double worst = 0.0;
  bool all_found = true;
  std::ostringstream det;
  for (const auto& row : rows) {
    if (!row.found) {
      all_found = false;
      continue;
    }
    const double bound_ratio = row.dev_sq_leading / row.dev_sq_bound;
    const double improve_ratio =
        row.dev_corrected / std::max(row.dev_leading, 1e-300);
    worst = std::max(worst, std::max(bound_ratio, improve_ratio));
    det << " qt=" << row.qt << ": dev2=" << fmt(row.dev_sq_leading)
        << "<=" << fmt(row.dev_sq_bound)
        << ", corrected/leading=" << fmt(improve_ratio) << ";";
  }
  r.measured = worst;
  r.pass = all_found && worst < 1.0;
  r.detail = "leading-order deviation within bound and corrected law beats "
             "leading at c0=1e-3;" + det.str();
  return r;
}

CheckResult check_classical_constant(const CheckOptions& opts) {
  CheckResult r;
  r.name = "classical-constant-identity";
  r.threshold = 1e-14;

  std::mt19937_64 rng(opts.seed + 3);
  std::uniform_real_distribution<double> ub(0.4, 2.5);
  std::uniform_real_distribution<double> ue(0.1, 10.0);
  std::uniform_real_distribution<double> uc(0.01, 10.0);
  std::uniform_real_distribution<double> uq(1e-4, 1e-2);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    PhysicalParams p;
    p.beta = ub(rng);
    p.eta0 = ue(rng);
    p.coupling = uc(rng);
    const double q = uq(rng);
    const double classical = classical_dispersion(q, p);
    // Leading-order quantum law, restored to physical units.
    const double qt = q / p.beta;
    const double quantum =
        p.beta * p.beta * leading_dispersion(qt, p.c0());
    worst = std::max(worst, std::abs(classical - quantum) / classical);
  }
  r.measured = worst;
  r.pass = worst <= r.threshold;
  r.detail = "classical law vs unscaled leading-order quantum law at 20 "
             "random (beta, eta0, coupling, q)";
  return r;
}

CheckResult check_coefficient_decay(const CheckOptions& opts) {
  CheckResult r;
  r.name = "coefficient-decay-bounds";
  r.threshold = 1.0;

  std::mt19937_64 rng(opts.seed + 4);
  std::uniform_real_distribution<double> uc(-4.0, -0.5);
  const int samples = opts.quick ? 10 : 50;
  SeriesConfig cfg;
  cfg.n_max = 30;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const ScaledPoint pt = random_regime_point(rng, 0.02, 0.3);
    const double c0 = std::pow(10.0, uc(rng));
    const SeriesCoefficients sc = lambda_coefficients(pt, c0, cfg);
    for (int n = 0; n <= 30; ++n) {
      const double b = coefficient_bound(c0, n);
      const double bs = slashed_coefficient_bound(c0, n);
      worst = std::max(worst, std::abs(sc.plus[n]) / b);
      worst = std::max(worst, std::abs(sc.minus[n]) / b);
      worst = std::max(worst, std::abs(sc.slash[n]) / bs);
    }
  }
  r.measured = worst;
  r.pass = worst <= 1.0;
  r.detail = "max |coefficient| / proof bound for n <= 30 over " +
             std::to_string(samples) + " random regime points";
  return r;
}

CheckResult check_propagator_identities(const CheckOptions& opts) {
  CheckResult r;
  r.name = "propagator-identities";
  r.threshold = 1.0;  // worst part / its own tolerance

  // Part 1: derivative jumps of hat_green at z = z' (step of -1) and at
  // z = 0 (step of -2 beta G^), measured by one-sided finite differences.
  std::mt19937_64 rng(opts.seed + 5);
  std::uniform_real_distribution<double> uk(0.05, 0.5);
  std::uniform_real_distribution<double> uw(-3.0, -0.2);
  std::uniform_real_distribution<double> ub(0.6, 1.5);
  std::uniform_real_distribution<double> uz(0.5, 2.0);
  double jump_residual = 0.0;
  const double h = 2e-3;
  for (int i = 0; i < 8; ++i) {
    const double k = uk(rng);
    const Complex w = uw(rng);
    double beta = ub(rng);
    const double zp = uz(rng);
    if (std::abs(std::sqrt(k * k - w.real()) - beta) < 0.1) beta += 0.2;

    auto g = [&](double z) { return hat_green(w, k, z, zp, beta); };
    const Complex d_right = one_sided_derivative(g, zp, h);
    const Complex d_left = one_sided_derivative(g, zp, -h);
    jump_residual = std::max(jump_residual, std::abs(d_right - d_left + 1.0));

    const Complex d0_right = one_sided_derivative(g, 0.0, h);
    const Complex d0_left = one_sided_derivative(g, 0.0, -h);
    const Complex expected = -2.0 * beta * g(0.0);
    jump_residual =
        std::max(jump_residual, std::abs(d0_right - d0_left - expected));
  }

  // Part 2: I1 closed form vs rotated-ray quadrature.
  double i1_rel = 0.0;
  const double i1_cases[][3] = {
      {0.7, 1.3, 1.0}, {0.3, 0.2, 0.8}, {2.0, 3.0, 1.2}, {1.0, 0.0, 1.0}};
  for (const auto& c : i1_cases) {
    const Complex closed = i1_integral(c[0], c[1], c[2]);
    const Complex quad = i1_integral_quadrature(c[0], c[1], c[2]);
    i1_rel = std::max(i1_rel, std::abs(closed - quad) / std::abs(closed));
  }

  // Part 3: complex_erfc against the frozen 40-digit table, |xi| <= 5.
  double erfc_rel = 0.0;
  for (std::size_t i = 0; i < kErfcReferenceCount; ++i) {
    const Complex xi(kErfcReference[i][0], kErfcReference[i][1]);
    if (std::abs(xi) > 5.0) continue;
    const Complex ref(kErfcReference[i][2], kErfcReference[i][3]);
    erfc_rel = std::max(erfc_rel, std::abs(complex_erfc(xi) - ref) /
                                      std::max(std::abs(ref), 1e-300));
  }

  r.measured = std::max({jump_residual / 1e-6, i1_rel / 1e-8,
                         erfc_rel / 1e-12});
  r.pass = r.measured <= 1.0;
  r.detail = "jump residual " + fmt(jump_residual) + " (tol 1e-6); I1 rel " +
             fmt(i1_rel) + " (tol 1e-8); erfc rel " + fmt(erfc_rel) +
             " (tol 1e-12, |xi|<=5); measured = worst/tol";
  return r;
}

CheckResult check_resonance_regularity(const CheckOptions&) {
  CheckResult r;
  r.name = "resonance-regularity";
  r.threshold = 10.0;

  const RegularityReport rep = regularity_probe(0.05, 1e-3);
  r.measured = rep.bound_ratio;
  const bool slope_ok = rep.slope >= 1.0;
  const bool gap_ok = rep.two_sided_gap <= 1e-6;
  r.pass = slope_ok && gap_ok && rep.bound_ratio <= 10.0;
  r.detail = "|det| bounded within 10x near wt = 2 qt (difference slope " +
             fmt(rep.slope) + " >= 1; two-sided gap " +
             fmt(rep.two_sided_gap) + " <= 1e-6)";
  return r;
}

CheckResult check_root_nullity(const CheckOptions&) {
  CheckResult r;
  r.name = "root-nullity-and-null-vectors";
  r.threshold = 1e-6;

  const double qt = 0.05, c0 = 1e-3;
  const DispersionRoot root = find_root(qt, c0);
  const BoundaryValueSolution sol =
      solve_boundary_values({qt, root.wt}, c0, {},
                            /*require_agreement=*/false);
  r.measured = sol.agreement;
  r.pass = sol.agreement <= 1e-6 && root.nullity_gap >= 10.0;
  r.detail = "minor vs SVD null-vector disagreement at the root; "
             "sigma_5/sigma_6 = " + fmt(root.nullity_gap) + " (>= 10)";
  return r;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opts) {
  return {check_kernel_closed_form(opts),
          check_functional_equation(opts),
          check_determinant_symmetry(opts),
          check_series_vs_fredholm_root(opts),
          check_mode_shape(opts),
          check_integral_residual(opts),
          check_semiclassical_window(opts),
          check_classical_constant(opts),
          check_coefficient_decay(opts),
          check_propagator_identities(opts),
          check_resonance_regularity(opts),
          check_root_nullity(opts)};
}

std::vector<CheckResult> run_oracle_checks(const CheckOptions& opts) {
  return {check_series_vs_fredholm_root(opts), check_mode_shape(opts),
          check_integral_residual(opts)};
}

std::string format_check_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
  os << "  measured=";
  os.precision(6);
  os << r.measured << "  threshold=" << r.threshold << "  -- " << r.detail;
  return os.str();
}

}  // namespace spdisp
