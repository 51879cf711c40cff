// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0

#include "spdisp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace spdisp {

namespace {

// Column prefactors of the closure matrix.
Complex coef_c0(double qt, Complex wt, double sigma, Complex a) {
  return -qt * (a + 1.0) / (qt * qt - sigma * wt);
}

Complex coef_plus(double qt, Complex wt, double sigma, Complex a) {
  return -(a + 1.0) * (a + 1.0) / (qt * qt - sigma * wt) *
         ((a - 1.0) * (a - 1.0) - qt * qt) / (4.0 * a);
}

Complex coef_minus(double qt, Complex /*wt*/, double /*sigma*/, Complex a) {
  return -((a + 1.0) * (a + 1.0) - qt * qt) / (4.0 * a);
}

// (vs, sigma) labels of the four doubled rows/columns, in order.
constexpr int kPairIdx[4][2] = {{+1, +1}, {-1, +1}, {+1, -1}, {-1, -1}};

// Scalar Brent root refinement on a bracketing interval [a, b].
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::logic_error("brent_root: not a bracket");

  double c = a, fc = fa, d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 1e-16;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m; e = m;  // bisection
    } else {
      double p, q_;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q_ = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q_ = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q_ = -q_;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q_ - std::abs(tol * q_),
                             std::abs(e * q_))) {
        e = d; d = p / q_;
      } else {
        d = m; e = m;
      }
    }
    a = b; fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa; d = b - a; e = d;
    }
  }
  return b;
}

}  // namespace

Matrix6c matrix_elements(const ScaledPoint& s, double c0,
                         const MatrixOptions& opts) {
  const double qt = s.qt;
  const Complex wt = s.wt;
  if (!(qt > 0.0))
    throw std::domain_error("matrix_elements: qt must be positive");
  const double res_dist =
      std::min(std::abs(wt - 2.0 * qt), std::abs(wt + 2.0 * qt));
  if (!opts.allow_near_resonance && res_dist < opts.excl_eps * qt)
    throw std::domain_error(
        "matrix_elements: wt within the exclusion zone of the entry "
        "resonance wt = +-2 qt");
  if (res_dist == 0.0)
    throw std::domain_error("matrix_elements: wt exactly at +-2 qt");

  const Complex a_of[2] = {alpha_sigma(s, +1), alpha_sigma(s, -1)};
  const SeriesCoefficients coeffs = lambda_coefficients(s, c0, opts.series);
  const int n_max = coeffs.n_max;
  const Complex pref = 4.0 * c0 / (4.0 * qt * qt - wt * wt);

  // sum_n Lambda_n / (base + 2 step n), assembled per row below.
  auto sum_over = [&](const std::vector<Complex>& lam, Complex base) {
    Complex acc = 0.0;
    for (int n = 0; n <= n_max; ++n) acc += lam[n] / (base + 2.0 * n);
    return acc;
  };
  auto lam_of = [&](int sigma_idx) -> const std::vector<Complex>& {
    return sigma_idx == 0 ? coeffs.plus : coeffs.minus;
  };

  Matrix6c A;
  for (int r = 0; r < 6; ++r) {
    // Row-dependent pole offsets: denominators base + 2n with the pole
    // ladder of the row's own boundary point.
    Complex base_lam[2];  // for the sigma' = +, - coefficient families
    Complex base_sl;
    if (r < 2) {
      const double vs = r == 0 ? 1.0 : -1.0;
      for (int k = 0; k < 2; ++k) base_lam[k] = vs * qt + a_of[k] + 1.0;
      base_sl = (vs + 1.0) * qt + 2.0;
    } else {
      const double vs = kPairIdx[r - 2][0];
      const int sg = kPairIdx[r - 2][1] > 0 ? 0 : 1;
      for (int k = 0; k < 2; ++k)
        base_lam[k] = vs * a_of[sg] + a_of[k] + 2.0;
      base_sl = vs * a_of[sg] + qt + 3.0;
    }

    for (int c = 0; c < 6; ++c) {
      Complex val;
      if (c < 2) {
        val = sum_over(coeffs.slash, base_sl);
        if (c == 0) {
          for (int k = 0; k < 2; ++k) {
            const double sg = k == 0 ? 1.0 : -1.0;
            val += coef_c0(qt, wt, sg, a_of[k]) *
                   sum_over(lam_of(k), base_lam[k]);
          }
        }
      } else {
        const int vsp = kPairIdx[c - 2][0];
        const int k = kPairIdx[c - 2][1] > 0 ? 0 : 1;
        const double sg = k == 0 ? 1.0 : -1.0;
        const Complex cf = vsp > 0 ? coef_plus(qt, wt, sg, a_of[k])
                                   : coef_minus(qt, wt, sg, a_of[k]);
        val = cf * sum_over(lam_of(k), base_lam[k]);
      }
      A(r, c) = pref * val;
    }
  }
  return A;
}

Complex lambda_det(const ScaledPoint& s, double c0, const MatrixOptions& opts) {
  const Matrix6c B = matrix_elements(s, c0, opts) - Matrix6c::Identity();
  return Eigen::PartialPivLU<Matrix6c>(B).determinant();
}

Complex determinant_cofactor(const Eigen::MatrixXcd& m) {
  const auto n = m.rows();
  if (n != m.cols())
    throw std::invalid_argument("determinant_cofactor: matrix must be square");
  if (n == 1) return m(0, 0);
  Complex det = 0.0;
  double sign = 1.0;
  for (Eigen::Index j = 0; j < n; ++j, sign = -sign) {
    Eigen::MatrixXcd sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = m(r, c);
      }
    }
    det += sign * m(0, j) * determinant_cofactor(sub);
  }
  return det;
}

DispersionRoot find_root(double qt, double c0, const RootOptions& opts) {
  if (!(qt > 0.0 && qt < 1.0))
    throw std::domain_error("find_root: need 0 < qt < 1");

  double lo = qt * qt * (1.0 + opts.delta);
  const double hi = qt * (1.0 - opts.delta);
  // Keep clear of the bracket edge wt = qt^2 where alpha_+ hits the
  // bound-state pole of the propagator.
  if (qt * qt + opts.edge_gap < hi) lo = std::max(lo, qt * qt + opts.edge_gap);
  if (!(lo < hi))
    throw std::domain_error("find_root: empty bracket for this qt");

  auto lam = [&](double wt) {
    return lambda_det({qt, wt}, c0, opts.matrix).real();
  };

  const int n = std::max(opts.scan_points, 8);
  std::vector<double> grid(n), val(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = lo + (hi - lo) * i / (n - 1);
    val[i] = lam(grid[i]);
  }

  DispersionRoot out;
  out.qt = qt;
  for (int i = 0; i + 1 < n; ++i) {
    if (val[i] == 0.0) {
      out.crossings.push_back(grid[i]);
    } else if (val[i] * val[i + 1] < 0.0) {
      out.crossings.push_back(
          brent_root(lam, grid[i], grid[i + 1], val[i], val[i + 1]));
    }
  }
  if (out.crossings.empty())
    throw NotFoundError("find_root: no sign change of the determinant "
                        "inside the bracket");

  out.wt = *std::min_element(out.crossings.begin(), out.crossings.end());
  out.det_residual = std::abs(lam(out.wt));

  const Matrix6c B =
      matrix_elements({qt, out.wt}, c0, opts.matrix) - Matrix6c::Identity();
  Eigen::JacobiSVD<Matrix6c> svd(B, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.nullity_gap = sv(4) / std::max(sv(5), 1e-300);
  out.null_vector = svd.matrixV().col(5);
  return out;
}

std::vector<SweepRow> dispersion_sweep(const std::vector<double>& qt_grid,
                                       double c0, const RootOptions& opts) {
  std::vector<SweepRow> rows;
  rows.reserve(qt_grid.size());
  for (double qt : qt_grid) {
    SweepRow row;
    row.qt = qt;
    try {
      row.root = find_root(qt, c0, opts);
      row.found = true;
      row.status = "ok";
    } catch (const std::exception& e) {
      row.found = false;
      row.status = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RegularityReport regularity_probe(double qt, double c0, double eps0,
                                  int levels, const SeriesConfig& series) {
  if (levels < 3)
    throw std::invalid_argument("regularity_probe: need at least 3 levels");
  MatrixOptions opts;
  opts.series = series;
  opts.allow_near_resonance = true;

  RegularityReport rep;
  rep.qt = qt;
  rep.c0 = c0;
  for (int k = 0; k < levels; ++k) {
    const double eps = eps0 / static_cast<double>(1 << k);
    rep.eps.push_back(eps);
    rep.above.push_back(lambda_det({qt, 2.0 * qt + eps}, c0, opts));
    rep.below.push_back(lambda_det({qt, 2.0 * qt - eps}, c0, opts));
  }

  // Neville extrapolation in eps to 0 (Lambda is analytic across the
  // resonance, so polynomial extrapolation converges fast).
  auto extrapolate = [&](const std::vector<Complex>& v) {
    std::vector<Complex> g = v;
    const auto& x = rep.eps;
    for (std::size_t level = 1; level < g.size(); ++level)
      for (std::size_t i = 0; i + level < g.size(); ++i)
        g[i] = (x[i] * g[i + 1] - x[i + level] * g[i]) /
               (x[i] - x[i + level]);
    return g[0];
  };
  rep.limit_above = extrapolate(rep.above);
  rep.limit_below = extrapolate(rep.below);

  // Richardson slope of the two-sided difference.  If Lambda is regular,
  // D(eps) = |Lambda(2qt+eps) - Lambda(2qt-eps)| = |2 Lambda'(2qt) eps +
  // O(eps^3)| -- the even orders cancel -- so successive halvings contract
  // by a factor >= 2 and the observed order is >= 1.  A pole or jump at
  // the resonance would pin D(eps) away from zero instead (slope ~ 0).
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < rep.above.size(); ++k) {
    const double d0 = std::abs(rep.above[k] - rep.below[k]);
    const double d1 = std::abs(rep.above[k + 1] - rep.below[k + 1]);
    rep.two_sided_diff.push_back(d0);
    if (k + 2 == rep.above.size()) rep.two_sided_diff.push_back(d1);
    if (d0 > 0.0 && d1 > 0.0) orders.push_back(std::log2(d0 / d1));
  }
  if (orders.empty()) {
    rep.slope = std::numeric_limits<double>::infinity();
  } else {
    std::nth_element(orders.begin(), orders.begin() + orders.size() / 2,
                     orders.end());
    rep.slope = orders[orders.size() / 2];
  }

  const double scale =
      std::max(std::abs(rep.limit_above), std::abs(rep.limit_below));
  rep.two_sided_gap =
      std::abs(rep.limit_above - rep.limit_below) / std::max(scale, 1e-300);

  double peak = 0.0;
  for (const auto& v : rep.above) peak = std::max(peak, std::abs(v));
  for (const auto& v : rep.below) peak = std::max(peak, std::abs(v));
  const double ref =
      0.5 * (std::abs(rep.above.front()) + std::abs(rep.below.front()));
  rep.bound_ratio = peak / std::max(ref, 1e-300);
  return rep;
}

}  // namespace spdisp
