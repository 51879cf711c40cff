// Copyright (c) 2026 the spdisp authors
// SPDX-License-Identifier: Apache-2.0
//
// spdisp: command-line front end for the surface-mode dispersion library.
//
// Subcommands:
//   dispersion     sweep qt and report the scaled root wt(qt)
//   amplitude      reconstruct the mode profile F(z) at one qt
//   semiclassical  exact roots vs leading/corrected long-wave laws
//   propagator     sample the frequency- and time-domain propagators
//   check          run the bundled verification suites
//
// Output is CSV (RFC 4180: header row, CRLF, quoting only where needed)
// or, with --json, an array of objects.  Floats are emitted at 17
// significant digits; NaN is never emitted -- failed rows carry a
// "status" column and empty numeric cells.  Config precedence is
// flags > JSON config file > built-in defaults, and every run logs its
// effective configuration to stderr.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spdisp/amplitude.hpp"
#include "spdisp/dispersion.hpp"
#include "spdisp/oracle.hpp"
#include "spdisp/params.hpp"
#include "spdisp/propagator.hpp"
#include "spdisp/selfcheck.hpp"
#include "spdisp/semiclassical.hpp"
#include "spdisp/series.hpp"

namespace {

using nlohmann::json;

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// A table cell: number, text, or empty (used where a row failed).
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << csv_escape(t.header[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (std::holds_alternative<double>(row[i])) {
        const double v = std::get<double>(row[i]);
        if (std::isfinite(v)) os << num17(v);
        // non-finite -> empty cell; the status column explains why
      } else if (std::holds_alternative<std::string>(row[i])) {
        os << csv_escape(std::get<std::string>(row[i]));
      }
    }
    os << "\r\n";
  }
}

void emit_json(std::ostream& os, const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) {
      if (std::holds_alternative<double>(row[i])) {
        const double v = std::get<double>(row[i]);
        obj[t.header[i]] = std::isfinite(v) ? json(v) : json(nullptr);
      } else if (std::holds_alternative<std::string>(row[i])) {
        obj[t.header[i]] = std::get<std::string>(row[i]);
      } else {
        obj[t.header[i]] = nullptr;
      }
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << "\n";
}

void emit(std::ostream& os, const Table& t, bool as_json) {
  if (as_json)
    emit_json(os, t);
  else
    emit_csv(os, t);
}

// Options shared by every subcommand.
struct CommonOpts {
  double c0 = 1e-3;
  double beta = 1.0;
  double eta0 = 1.0;
  double coupling = -1.0;  // negative -> not supplied
  std::string config_path;
  std::string output_path;
  bool as_json = false;

  CLI::Option* c0_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* eta0_opt = nullptr;
  CLI::Option* coupling_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  o.c0_opt = cmd->add_option("--c0", o.c0,
                             "Dimensionless coupling (conflicts with "
                             "--beta/--eta0/--coupling)");
  o.beta_opt =
      cmd->add_option("--beta", o.beta, "Well strength (inverse length)");
  o.eta0_opt = cmd->add_option("--eta0", o.eta0, "Areal density");
  o.coupling_opt = cmd->add_option("--coupling", o.coupling,
                                   "Coulomb strength e^2 eta0 / eps0");
  cmd->add_option("--config", o.config_path,
                  "JSON config file (flags take precedence)");
  cmd->add_option("-o,--output", o.output_path,
                  "Output file (default: stdout)");
  cmd->add_flag("--json", o.as_json, "Emit JSON instead of CSV");
}

// Flags > config file > defaults.
struct Resolver {
  json cfg = json::object();

  void load(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    in >> cfg;
    if (!cfg.is_object())
      throw std::runtime_error("config file must hold a JSON object");
  }

  template <typename T>
  void resolve(const CLI::Option* opt, T& value, const std::string& key) const {
    if (opt && opt->count() > 0) return;
    if (cfg.contains(key)) value = cfg.at(key).get<T>();
  }
  bool has(const CLI::Option* opt, const std::string& key) const {
    return (opt && opt->count() > 0) || cfg.contains(key);
  }
};

// Build physical parameters from either --c0 or the physical triple.
spdisp::PhysicalParams resolve_params(const CommonOpts& o, const Resolver& r,
                                      json& effective) {
  const bool has_c0 = r.has(o.c0_opt, "c0");
  const bool has_phys = r.has(o.beta_opt, "beta") ||
                        r.has(o.eta0_opt, "eta0") ||
                        r.has(o.coupling_opt, "coupling");
  if (has_c0 && has_phys)
    throw std::invalid_argument(
        "give either --c0 or the physical --beta/--eta0/--coupling, not both");

  spdisp::PhysicalParams p;
  if (has_phys) {
    p.beta = o.beta;
    p.eta0 = o.eta0;
    p.coupling = o.coupling;
    if (p.coupling < 0.0)
      throw std::invalid_argument(
          "--coupling is required when using physical units");
  } else {
    if (!(o.c0 > 0.0))
      throw std::invalid_argument("--c0 must be positive");
    p.beta = 1.0;
    p.eta0 = 1.0;
    p.coupling = 2.0 * o.c0;  // c0 = coupling / (2 beta^3) with beta = 1
  }
  p.validate();
  if (!(p.c0() > 0.0))
    throw std::invalid_argument("coupling must be positive");
  effective["c0"] = p.c0();
  effective["beta"] = p.beta;
  effective["eta0"] = p.eta0;
  effective["coupling"] = p.coupling;
  return p;
}

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      os = &file;
    }
  }
};

void log_effective(const json& effective) {
  std::cerr << "config: " << effective.dump() << "\n";
}

std::vector<double> parse_grid_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty --qgrid list");
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

// ---------------------------------------------------------------- dispersion

int run_dispersion(const CommonOpts& common, const Resolver& r,
                   double qmin, double qmax, int n,
                   const CLI::Option* qmin_o, const CLI::Option* qmax_o,
                   const CLI::Option* n_o) {
  double lo = qmin, hi = qmax;
  int count = n;
  r.resolve(qmin_o, lo, "qmin");
  r.resolve(qmax_o, hi, "qmax");
  r.resolve(n_o, count, "n");

  json effective{{"subcommand", "dispersion"},
                 {"qmin", lo},
                 {"qmax", hi},
                 {"n", count},
                 {"format", common.as_json ? "json" : "csv"}};
  const spdisp::PhysicalParams params = resolve_params(common, r, effective);
  log_effective(effective);

  const auto rows = spdisp::dispersion_sweep(linear_grid(lo, hi, count),
                                             params.c0());

  Table t;
  t.header = {"qt", "wt", "det_residual", "nullity_gap", "status"};
  int found = 0;
  for (const auto& row : rows) {
    std::vector<Cell> cells;
    cells.emplace_back(row.qt);
    if (row.found) {
      ++found;
      cells.emplace_back(row.root.wt);
      cells.emplace_back(row.root.det_residual);
      cells.emplace_back(row.root.nullity_gap);
      cells.emplace_back(std::string("ok"));
    } else {
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::string("failed: ") + row.status);
    }
    t.rows.push_back(std::move(cells));
  }
  OutputSink sink(common.output_path);
  emit(*sink.os, t, common.as_json);
  if (found == 0) throw spdisp::NotFoundError("no dispersion root found at any grid point");
  return 0;
}

// ----------------------------------------------------------------- amplitude

int run_amplitude(const CommonOpts& common, const Resolver& r, double qt,
                  double zmax, int n, const CLI::Option* qt_o,
                  const CLI::Option* zmax_o, const CLI::Option* n_o) {
  double q = qt, zm = zmax;
  int count = n;
  r.resolve(qt_o, q, "qt");
  r.resolve(zmax_o, zm, "zmax");
  r.resolve(n_o, count, "n");

  json effective{{"subcommand", "amplitude"},
                 {"qt", q},
                 {"zmax", zm},
                 {"n", count},
                 {"format", common.as_json ? "json" : "csv"}};
  const spdisp::PhysicalParams params = resolve_params(common, r, effective);
  log_effective(effective);

  const double c0 = params.c0();
  const spdisp::DispersionRoot root = spdisp::find_root(q, c0);
  const spdisp::ScaledPoint pt{q, root.wt};
  const spdisp::BoundaryValues bv =
      spdisp::solve_boundary_values(pt, c0).minor_path;
  const spdisp::AmplitudeExpansion exp = spdisp::build_expansion(pt, c0, bv);
  std::cerr << "root: wt = " << num17(root.wt)
            << " (|det| = " << num17(root.det_residual) << ")\n";

  Table t;
  t.header = {"z",      "re_f",   "im_f",  "abs_f",
              "far_re", "far_im", "far_abs", "status"};
  for (double z : linear_grid(0.0, zm, count)) {
    const spdisp::Complex f = spdisp::amplitude_eval(exp, z);
    const spdisp::Complex far = spdisp::far_field(exp, z);
    t.rows.push_back({Cell{z}, Cell{f.real()}, Cell{f.imag()},
                      Cell{std::abs(f)}, Cell{far.real()}, Cell{far.imag()},
                      Cell{std::abs(far)}, Cell{std::string("ok")}});
  }
  OutputSink sink(common.output_path);
  emit(*sink.os, t, common.as_json);
  return 0;
}

// ------------------------------------------------------------- semiclassical

int run_semiclassical(const CommonOpts& common, const Resolver& r,
                      std::string qgrid, const CLI::Option* qgrid_o) {
  std::string grid_text = std::move(qgrid);
  r.resolve(qgrid_o, grid_text, "qgrid");

  json effective{{"subcommand", "semiclassical"},
                 {"qgrid", grid_text},
                 {"format", common.as_json ? "json" : "csv"}};
  const spdisp::PhysicalParams params = resolve_params(common, r, effective);
  log_effective(effective);

  const auto rows =
      spdisp::compare_report(parse_grid_list(grid_text), params.c0());

  Table t;
  t.header = {"qt",          "wt_exact",     "wt_leading", "wt_corrected",
              "dev_sq_leading", "dev_sq_bound", "dev_leading", "dev_corrected",
              "status"};
  int found = 0;
  for (const auto& row : rows) {
    std::vector<Cell> cells;
    cells.emplace_back(row.qt);
    if (row.found) {
      ++found;
      cells.emplace_back(row.wt_exact);
      cells.emplace_back(row.wt_leading);
      cells.emplace_back(row.wt_corrected);
      cells.emplace_back(row.dev_sq_leading);
      cells.emplace_back(row.dev_sq_bound);
      cells.emplace_back(row.dev_leading);
      cells.emplace_back(row.dev_corrected);
      cells.emplace_back(std::string("ok"));
    } else {
      for (int i = 0; i < 7; ++i) cells.emplace_back(std::monostate{});
      cells.emplace_back(std::string("failed: ") + row.status);
    }
    t.rows.push_back(std::move(cells));
  }
  OutputSink sink(common.output_path);
  emit(*sink.os, t, common.as_json);
  if (found == 0)
    throw spdisp::NotFoundError("no dispersion root found at any grid point");
  return 0;
}

// ---------------------------------------------------------------- propagator

int run_propagator(const CommonOpts& common, const Resolver& r, double w_re,
                   double w_im, double k, double zp, double tt, double rpar,
                   double zmin, double zmax, int n,
                   const std::vector<const CLI::Option*>& opts_in_order) {
  double wre = w_re, wim = w_im, kk = k, zzp = zp, t_ = tt, rp = rpar,
         zlo = zmin, zhi = zmax;
  int count = n;
  const char* keys[] = {"w-re", "w-im", "k",    "zp", "t",
                        "rpar", "zmin", "zmax", "n"};
  double* vals[] = {&wre, &wim, &kk, &zzp, &t_, &rp, &zlo, &zhi, nullptr};
  for (int i = 0; i < 8; ++i) r.resolve(opts_in_order[i], *vals[i], keys[i]);
  r.resolve(opts_in_order[8], count, "n");

  json effective{{"subcommand", "propagator"},
                 {"w-re", wre},
                 {"w-im", wim},
                 {"k", kk},
                 {"zp", zzp},
                 {"t", t_},
                 {"rpar", rp},
                 {"zmin", zlo},
                 {"zmax", zhi},
                 {"n", count},
                 {"format", common.as_json ? "json" : "csv"}};
  const spdisp::PhysicalParams params = resolve_params(common, r, effective);
  log_effective(effective);

  Table t;
  t.header = {"z",      "zp",     "k",     "w_re",  "w_im", "hat_re",
              "hat_im", "t",      "rpar",  "td_re", "td_im", "status"};
  const spdisp::Complex w(wre, wim);
  for (double z : linear_grid(zlo, zhi, count)) {
    std::vector<Cell> cells{Cell{z},  Cell{zzp}, Cell{kk},
                            Cell{wre}, Cell{wim}};
    std::string status = "ok";
    try {
      const spdisp::Complex hat = spdisp::hat_green(w, kk, z, zzp, params.beta);
      cells.emplace_back(hat.real());
      cells.emplace_back(hat.imag());
    } catch (const std::exception& e) {
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
      status = std::string("failed: ") + e.what();
    }
    cells.emplace_back(t_);
    cells.emplace_back(rp);
    try {
      const spdisp::Complex td = spdisp::td_green(t_, rp, z, zzp, params.beta);
      cells.emplace_back(td.real());
      cells.emplace_back(td.imag());
    } catch (const std::exception& e) {
      cells.emplace_back(std::monostate{});
      cells.emplace_back(std::monostate{});
      if (status == "ok") status = std::string("failed: ") + e.what();
    }
    cells.emplace_back(status);
    t.rows.push_back(std::move(cells));
  }
  OutputSink sink(common.output_path);
  emit(*sink.os, t, common.as_json);
  return 0;
}

// --------------------------------------------------------------------- check

int run_check(const CommonOpts& common, const Resolver& r, bool oracle_only,
              bool quick, std::uint64_t seed, const std::string& dump_path,
              double dump_qt, double dump_wt) {
  json effective{{"subcommand", "check"},
                 {"oracle", oracle_only},
                 {"quick", quick},
                 {"seed", seed}};
  const spdisp::PhysicalParams params = resolve_params(common, r, effective);
  log_effective(effective);

  if (!dump_path.empty()) {
    const double c0 = params.c0();
    const double wt =
        dump_wt > 0.0 ? dump_wt : spdisp::find_root(dump_qt, c0).wt;
    spdisp::GridSpec grid;
    if (quick) grid.n_points = 160;
    const spdisp::FredholmOperator op =
        spdisp::build_operator({dump_qt, wt}, c0, grid);
    std::ofstream out(dump_path);
    if (!out)
      throw std::runtime_error("cannot open dump file: " + dump_path);
    const Eigen::Index n = op.nystrom.rows();
    out << n << "\n";
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        out << num17(op.nystrom(i, j)) << " " << num17(0.0) << "\n";
    std::cerr << "dumped " << n << "x" << n << " operator at qt=" << dump_qt
              << " wt=" << num17(wt) << " to " << dump_path << "\n";
    return 0;  // the dump is a standalone inspection action
  }

  spdisp::CheckOptions copts;
  copts.seed = seed;
  copts.quick = quick;
  const auto results = oracle_only ? spdisp::run_oracle_checks(copts)
                                   : spdisp::run_all_checks(copts);

  OutputSink sink(common.output_path);
  bool all_pass = true;
  for (const auto& res : results) {
    *sink.os << spdisp::format_check_line(res) << "\n";
    all_pass = all_pass && res.pass;
  }
  *sink.os << (all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface-mode dispersion, amplitude, and propagator toolkit"};
  app.require_subcommand(1);

  // dispersion
  auto* disp = app.add_subcommand("dispersion", "Sweep qt for roots wt(qt)");
  CommonOpts disp_common;
  add_common(disp, disp_common);
  double qmin = 0.02, qmax = 0.1;
  int disp_n = 9;
  auto* qmin_o = disp->add_option("--qmin", qmin, "Smallest scaled wavenumber");
  auto* qmax_o = disp->add_option("--qmax", qmax, "Largest scaled wavenumber");
  auto* disp_n_o = disp->add_option("-n,--n", disp_n, "Grid points");

  // amplitude
  auto* amp = app.add_subcommand("amplitude", "Mode profile F(z) at one qt");
  CommonOpts amp_common;
  add_common(amp, amp_common);
  double amp_qt = 0.05, amp_zmax = 10.0;
  int amp_n = 201;
  auto* amp_qt_o = amp->add_option("--qt", amp_qt, "Scaled wavenumber");
  auto* amp_zmax_o = amp->add_option("--zmax", amp_zmax, "Profile extent");
  auto* amp_n_o = amp->add_option("-n,--n", amp_n, "Sample count");

  // semiclassical
  auto* semi = app.add_subcommand("semiclassical",
                                  "Exact vs asymptotic long-wave laws");
  CommonOpts semi_common;
  add_common(semi, semi_common);
  std::string qgrid = "0.02,0.05,0.08";
  auto* qgrid_o =
      semi->add_option("--qgrid", qgrid, "Comma-separated qt list");

  // propagator
  auto* prop = app.add_subcommand("propagator",
                                  "Sample hat_green and td_green");
  CommonOpts prop_common;
  add_common(prop, prop_common);
  double w_re = -0.98, w_im = 0.0, prop_k = 0.05, prop_zp = 0.9, prop_t = 1.0,
         prop_rpar = 0.3, prop_zmin = -2.0, prop_zmax = 2.0;
  int prop_n = 81;
  std::vector<const CLI::Option*> prop_opts{
      prop->add_option("--w-re", w_re, "Re of the frequency argument"),
      prop->add_option("--w-im", w_im, "Im of the frequency argument"),
      prop->add_option("--k", prop_k, "In-plane wavenumber"),
      prop->add_option("--zp", prop_zp, "Source height z'"),
      prop->add_option("--t", prop_t, "Time argument of td_green"),
      prop->add_option("--rpar", prop_rpar, "In-plane distance"),
      prop->add_option("--zmin", prop_zmin, "Smallest z sample"),
      prop->add_option("--zmax", prop_zmax, "Largest z sample"),
      prop->add_option("-n,--n", prop_n, "Sample count")};

  // check
  auto* chk = app.add_subcommand("check", "Run the verification suites");
  CommonOpts chk_common;
  add_common(chk, chk_common);
  bool oracle_only = false, quick = false;
  std::uint64_t seed = 20260814;
  std::string dump_path;
  double dump_qt = 0.05, dump_wt = -1.0;
  chk->add_flag("--oracle", oracle_only,
                "Run only the operator cross-validation suites");
  chk->add_flag("--quick", quick, "Smaller grids (development aid)");
  chk->add_option("--seed", seed, "Seed for randomized property checks");
  chk->add_option("--dump-operator", dump_path,
                  "Write the discretized operator to this file");
  chk->add_option("--qt", dump_qt, "Wavenumber for --dump-operator");
  chk->add_option("--wt", dump_wt,
                  "Frequency for --dump-operator (default: series root)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Resolver r;
    if (disp->parsed()) {
      r.load(disp_common.config_path);
      return run_dispersion(disp_common, r, qmin, qmax, disp_n, qmin_o,
                            qmax_o, disp_n_o);
    }
    if (amp->parsed()) {
      r.load(amp_common.config_path);
      return run_amplitude(amp_common, r, amp_qt, amp_zmax, amp_n, amp_qt_o,
                           amp_zmax_o, amp_n_o);
    }
    if (semi->parsed()) {
      r.load(semi_common.config_path);
      return run_semiclassical(semi_common, r, qgrid, qgrid_o);
    }
    if (prop->parsed()) {
      r.load(prop_common.config_path);
      return run_propagator(prop_common, r, w_re, w_im, prop_k, prop_zp,
                            prop_t, prop_rpar, prop_zmin, prop_zmax, prop_n,
                            prop_opts);
    }
    if (chk->parsed()) {
      r.load(chk_common.config_path);
      return run_check(chk_common, r, oracle_only, quick, seed, dump_path,
                       dump_qt, dump_wt);
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const spdisp::NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
