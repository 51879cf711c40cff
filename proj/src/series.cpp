// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/series.hpp"

#include <cmath>
#include <stdexcept>

namespace spdisp {

double coefficient_bound(double c0, int n) {
  if (n < 0) throw std::invalid_argument("coefficient_bound: n must be >= 0");
  double b = 1.0;
  for (int j = 1; j <= n; ++j) b *= 1.5 * c0 / (static_cast<double>(j) *
                                                 j * j * j);
  return b;
}

double slashed_coefficient_bound(double c0, int n) {
  if (n < 0)
    throw std::invalid_argument("slashed_coefficient_bound: n must be >= 0");
  double b = 1.0;
  for (int j = 1; j <= n; ++j) b *= 0.375 * c0 / (static_cast<double>(j) *
                                                   j * j * j);
  return b;
}

int default_order(double c0, double tail_tol, int n_cap) {
  for (int n = 0; n < n_cap; ++n) {
    if (2.0 * coefficient_bound(c0, n + 1) < tail_tol) return n;
  }
  return n_cap;
}

PoleSet pole_set(const ScaledPoint& s, int n_max) {
  if (n_max < 0) throw std::invalid_argument("pole_set: n_max must be >= 0");
  const Complex ap = alpha_sigma(s, +1);
  const Complex am = alpha_sigma(s, -1);
  PoleSet p;
  p.plus.reserve(n_max + 1);
  p.minus.reserve(n_max + 1);
  p.slash.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    p.plus.push_back(-(ap + 2.0 * n + 1.0));
    p.minus.push_back(-(am + 2.0 * n + 1.0));
    p.slash.push_back(-(s.qt + 2.0 * n + 2.0));
  }
  return p;
}

SeriesCoefficients lambda_coefficients(const ScaledPoint& s, double c0,
                                       const SeriesConfig& cfg) {
  const int n_max =
      cfg.n_max >= 0 ? cfg.n_max : default_order(c0, cfg.tail_tol, cfg.n_cap);
  SeriesCoefficients out;
  out.n_max = n_max;
  out.tail_bound = 2.0 * coefficient_bound(c0, n_max + 1);

  const Complex wt = s.wt;
  for (int sigma : {+1, -1}) {
    const Complex a = alpha_sigma(s, sigma);
    auto& lam = sigma > 0 ? out.plus : out.minus;
    lam.assign(1, 1.0);
    lam.reserve(n_max + 1);
    const double sg = sigma;
    for (int j = 1; j <= n_max; ++j) {
      const double dj = j;
      const Complex f = (-c0 / dj) * (1.0 / (dj + a)) *
                        (4.0 * dj * (dj + a) - sg * wt) /
                        (4.0 * dj * (dj + a) - 2.0 * sg * wt) /
                        (1.0 + (2.0 * dj - 1.0) * (2.0 * dj - 1.0) +
                         2.0 * (2.0 * dj - 1.0) * a - sg * wt);
      lam.push_back(lam.back() * f);
    }
  }

  out.slash.assign(1, 1.0);
  out.slash.reserve(n_max + 1);
  for (int j = 1; j <= n_max; ++j) {
    const double dj = j;
    const Complex v = dj * (dj + 1.0) + (dj + 0.5) * s.qt;
    const Complex f = (-c0 / dj) * (1.0 / (dj + s.qt)) * v /
                      (4.0 * v * v - wt * wt / 4.0);
    out.slash.push_back(out.slash.back() * f);
  }
  return out;
}

Residues residues(const ScaledPoint& s, double c0, const BoundaryValues& bv,
                  const SeriesCoefficients& coeffs) {
  const Complex wt = s.wt;
  const double qt = s.qt;
  Residues r;
  for (int sigma : {+1, -1}) {
    const Complex a = alpha_sigma(s, sigma);
    const Complex am = a - 1.0;
    const Complex ap = a + 1.0;
    const Complex app = ap * ap - qt * qt;
    const Complex amm = am * am - qt * qt;
    const Complex f_up = sigma > 0 ? bv.f_plus_ap : bv.f_plus_am;
    const Complex f_dn = sigma > 0 ? bv.f_minus_ap : bv.f_minus_am;
    const Complex base =
        c0 * (4.0 * qt * bv.f_q / (am * app * amm) +
              (1.0 / a) * (ap / am * f_up / app + f_dn / amm));
    (sigma > 0 ? r.base_plus : r.base_minus) = base;
    auto& fam = sigma > 0 ? r.plus : r.minus;
    const auto& lam = sigma > 0 ? coeffs.plus : coeffs.minus;
    fam.resize(lam.size());
    for (std::size_t n = 0; n < lam.size(); ++n) fam[n] = lam[n] * base;
  }
  r.base_slash =
      4.0 * c0 / (4.0 * qt * qt - wt * wt) * (bv.f_q + bv.f_mq);
  r.slash.resize(coeffs.slash.size());
  for (std::size_t n = 0; n < coeffs.slash.size(); ++n)
    r.slash[n] = coeffs.slash[n] * r.base_slash;
  return r;
}

Complex breve_f(Complex s, const PoleSet& poles, const Residues& res,
                double exclusion) {
  auto accumulate = [&](const std::vector<Complex>& p,
                        const std::vector<Complex>& r) {
    Complex acc = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      if (std::abs(s - p[n]) < exclusion)
        throw std::domain_error("breve_f: s within exclusion radius of a pole");
      acc += r[n] / (s - p[n]);
    }
    return acc;
  };
  return accumulate(poles.plus, res.plus) + accumulate(poles.minus, res.minus) +
         accumulate(poles.slash, res.slash);
}

Complex residue_probe(const std::function<Complex(Complex)>& f, Complex pole,
                      double r0) {
  // g(r) = r f(pole + r) = R + c1 r + c2 r^2 + ...; Neville extrapolation
  // of g over four nested radii to r = 0.
  constexpr int kPoints = 4;
  double r[kPoints];
  Complex g[kPoints];
  for (int i = 0; i < kPoints; ++i) {
    r[i] = r0 / static_cast<double>(1 << i);
    g[i] = r[i] * f(pole + r[i]);
  }
  for (int level = 1; level < kPoints; ++level) {
    for (int i = 0; i < kPoints - level; ++i) {
      g[i] = (r[i] * g[i + 1] - r[i + level] * g[i]) / (r[i] - r[i + level]);
    }
  }
  return g[0];
}

Complex functional_residual(Complex s, const ScaledPoint& pt, double c0,
                            const BoundaryValues& bv,
                            const SeriesCoefficients& coeffs) {
  const PoleSet poles = pole_set(pt, coeffs.n_max);
  const Residues res = residues(pt, c0, bv, coeffs);
  auto F = [&](Complex x) { return breve_f(x, poles, res); };

  const double qt = pt.qt;
  Complex rhs = 0.0;
  for (int sigma : {+1, -1}) {
    const Complex a = alpha_sigma(pt, sigma);
    const Complex am = a - 1.0;
    const Complex ap = a + 1.0;
    const Complex app = ap * ap - qt * qt;
    const Complex amm = am * am - qt * qt;

    Complex t_q = 4.0 * qt * qt / (am * app * amm) / (s + 1.0 + a);
    for (double vs : {+1.0, -1.0})
      t_q += 1.0 / ((1.0 + vs * qt) * (1.0 + vs * qt) - a * a) /
             (s + 2.0 + vs * qt);

    const Complex t_a = qt / (a * app) *
                        (ap / am / (s + 1.0 + a) + 1.0 / (s + 1.0 - a));

    Complex t_shift = 0.0;
    for (double vs : {+1.0, -1.0})
      t_shift += vs * (1.0 / ((1.0 + vs * qt) * (1.0 + vs * qt) - a * a) /
                           (s + 2.0 + vs * qt) -
                       (qt / a) /
                           ((1.0 + vs * a) * (1.0 + vs * a) - qt * qt) /
                           (s + 1.0 - vs * a));

    // All fixed-argument values are taken from the partial-fraction
    // representation itself, so the residual probes its internal
    // consistency; at a root these coincide with the matrix boundary
    // values to machine precision.
    rhs += F(qt) * t_q + F(1.0 + a) * t_a + F(s + 2.0) * t_shift;
  }
  return F(s) - c0 / qt * rhs;
}

}  // namespace spdisp
