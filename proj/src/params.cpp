// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/params.hpp"

#include <cmath>

namespace spdisp {

void PhysicalParams::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("PhysicalParams: beta must be positive and finite");
  if (!(eta0 > 0.0) || !std::isfinite(eta0))
    throw std::domain_error("PhysicalParams: eta0 must be positive and finite");
  if (!(coupling >= 0.0) || !std::isfinite(coupling))
    throw std::domain_error(
        "PhysicalParams: coupling must be non-negative and finite");
}

LengthScales length_scales(const PhysicalParams& p) {
  p.validate();
  if (p.coupling == 0.0)
    throw std::domain_error("length_scales: Coulomb length diverges at zero coupling");
  LengthScales out;
  out.l_b = 1.0 / p.beta;
  // Defined so that c0 = (2 l_b / l_C)^3 exactly.
  out.l_c = 2.0 * std::cbrt(2.0 / p.coupling);
  return out;
}

ScaledPoint to_scaled(const PhysicalParams& p, double q, Complex omega) {
  p.validate();
  return {q / p.beta, omega / (p.beta * p.beta)};
}

PhysicalPoint from_scaled(const PhysicalParams& p, const ScaledPoint& s) {
  p.validate();
  return {s.qt * p.beta, s.wt * (p.beta * p.beta)};
}

Complex branch_root(Complex arg) {
  if (arg.imag() == 0.0 && arg.real() <= 0.0)
    throw std::domain_error(
        "branch_root: argument on the branch cut (non-positive real axis)");
  // Principal square root already satisfies Re > 0 off the cut.
  return std::sqrt(arg);
}

Complex alpha_sigma(const ScaledPoint& s, int sigma) {
  if (sigma != 1 && sigma != -1)
    throw std::invalid_argument("alpha_sigma: sigma must be +1 or -1");
  return branch_root(1.0 + s.qt * s.qt - static_cast<double>(sigma) * s.wt);
}

RegimeReport validate_regime(const ScaledPoint& s, const PhysicalParams& p,
                             const SemiclassicalThresholds& thresholds) {
  p.validate();
  RegimeReport r;
  r.qt = s.qt;
  r.abs_wt = std::abs(s.wt);
  r.c0 = p.c0();
  r.wt_over_qt = s.qt > 0.0 ? r.abs_wt / s.qt : 0.0;
  r.qt2_over_wt = r.abs_wt > 0.0 ? s.qt * s.qt / r.abs_wt : 0.0;
  r.in_bracket = s.qt > 0.0 && s.qt < 1.0 && r.abs_wt < s.qt &&
                 s.qt * s.qt < r.abs_wt;
  r.semiclassical = r.in_bracket && s.qt <= thresholds.qt_max &&
                    r.wt_over_qt <= thresholds.wt_over_qt_max &&
                    r.qt2_over_wt <= thresholds.qt2_over_wt_max &&
                    r.c0 <= thresholds.c0_max;
  return r;
}

}  // namespace spdisp
