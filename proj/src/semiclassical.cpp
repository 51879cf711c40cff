// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/semiclassical.hpp"

#include <cmath>
#include <stdexcept>

namespace spdisp {

double classical_dispersion(double q, const PhysicalParams& p) {
  p.validate();
  if (!(q > 0.0))
    throw std::domain_error("classical_dispersion: q must be positive");
  return std::sqrt(p.coupling * q);
}

double leading_dispersion(double qt, double c0) {
  if (!(qt > 0.0) || !(c0 > 0.0))
    throw std::domain_error("leading_dispersion: need qt > 0 and c0 > 0");
  return std::sqrt(2.0 * c0 * qt);
}

double corrected_dispersion(double qt, double c0) {
  if (!(qt > 0.0) || !(c0 > 0.0))
    throw std::domain_error("corrected_dispersion: need qt > 0 and c0 > 0");
  const double q4 = qt * qt * qt * qt;
  double w2 = 2.0 * c0 * qt;
  for (int iter = 0; iter < 200; ++iter) {
    const double next = 2.0 * c0 * qt * (1.0 - 0.75 * qt + q4 / w2);
    if (!(next > 0.0))
      throw std::runtime_error(
          "corrected_dispersion: fixed point left the physical branch");
    const double change = std::abs(next - w2);
    w2 = next;
    if (change <= 1e-15 * w2) break;
  }
  return std::sqrt(w2);
}

AsymptoticQuantities asymptotic_quantities(double qt, double wt, double c0) {
  AsymptoticQuantities a;
  const double d0 = 4.0 * qt * qt - wt * wt;
  const double dp = qt * qt + wt;
  const double dm = qt * qt - wt;
  const double dd = wt * wt - qt * qt * qt * qt;
  if (d0 == 0.0 || dp == 0.0 || dm == 0.0 || dd == 0.0)
    throw std::domain_error("asymptotic_quantities: resonant denominator");
  a.h0 = 2.0 * c0 / d0;
  a.h_plus = 0.25 * c0 / dp;
  a.h_minus = 0.25 * c0 / dm;
  a.p = 4.0 * qt * qt * qt / dd;
  return a;
}

std::vector<SemiclassicalRow> compare_report(const std::vector<double>& qt_grid,
                                             double c0,
                                             const RootOptions& opts) {
  std::vector<SemiclassicalRow> rows;
  rows.reserve(qt_grid.size());
  for (double qt : qt_grid) {
    SemiclassicalRow row;
    row.qt = qt;
    row.wt_leading = leading_dispersion(qt, c0);
    row.wt_corrected = corrected_dispersion(qt, c0);
    try {
      const DispersionRoot root = find_root(qt, c0, opts);
      row.found = true;
      row.status = "ok";
      row.wt_exact = root.wt;
      const double w2 = root.wt * root.wt;
      const double lead2 = 2.0 * c0 * qt;
      row.dev_sq_leading = std::abs(w2 - lead2) / lead2;
      row.dev_sq_bound = 1.5 * (0.75 * qt + qt * qt * qt * qt / w2);
      row.dev_leading = std::abs(root.wt - row.wt_leading) / root.wt;
      row.dev_corrected = std::abs(root.wt - row.wt_corrected) / root.wt;
    } catch (const std::exception& e) {
      row.found = false;
      row.status = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spdisp
