// Copyright 2026 The wsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wsym: command line front end. Machine output is JSON (stdout or --out); the human summary goes
// to stderr. Exit codes: 0 pass, 1 input error, 2 certificate violation, 3 divergence,
// 4 internal inconsistency.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "job_config.hpp"
#include "wsym/acceptance.hpp"
#include "wsym/bargmann.hpp"
#include "wsym/error.hpp"
#include "wsym/order_calculus.hpp"
#include "wsym/quantize.hpp"
#include "wsym/report.hpp"
#include "wsym/schatten.hpp"
#include "wsym/symbol_class.hpp"

#ifndef WSYM_VERSION
#define WSYM_VERSION "0.0.0"
#endif

namespace wsym::cli {
namespace {

using nlohmann::json;

enum Exit { kPass = 0, kInput = 1, kViolation = 2, kDivergence = 3, kInconsistent = 4 };

struct Outcome {
  json result;
  int code = kPass;
  std::string summary;
};

json inf_safe(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

json vec_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vec vec_from(const json& j, int size, const char* what) {
  const auto v = j.get<std::vector<double>>();
  if (static_cast<int>(v.size()) != size) throw DimensionError(std::string(what) + " has the wrong length");
  return Eigen::Map<const Vec>(v.data(), size);
}

json versions() {
  json v;
  for (const char* m : {"phase_space", "order_functions", "symbol_class", "quantize", "bargmann", "schatten",
                        "bspaces", "cli"})
    v[m] = WSYM_VERSION;
  return v;
}

Outcome certify_order(const JobConfig& cfg) {
  const OrderFunction m = order_function_from(cfg.require("m"), cfg.n());
  const auto samples = cfg.body.value("samples", std::size_t{100000});
  const double radius = cfg.body.value("radius", 50.0);
  const SweepResult s = certify_order_axiom(m, samples, radius, cfg.seed);
  Outcome o;
  o.result = {{"order_function", m.to_json()},
              {"certificate", {{"C0", m.certificate().c0}, {"N0", m.certificate().n0}}},
              {"sweep",
               {{"passed", s.passed},
                {"max_ratio", s.max_ratio},
                {"samples", s.samples},
                {"radius", radius},
                {"worst_rho", vec_json(s.worst_rho)},
                {"worst_mu", vec_json(s.worst_mu)}}}};
  o.code = s.passed ? kPass : kViolation;
  o.summary = "C0 = " + std::to_string(m.certificate().c0) + ", N0 = " + std::to_string(m.certificate().n0) +
              ", sweep max ratio " + std::to_string(s.max_ratio) + (s.passed ? " (pass)" : " (VIOLATED)");
  return o;
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Outcome compose_cmd(const JobConfig& cfg) {
  const int n = cfg.n();
  const OrderFunction m1 = order_function_from(cfg.require("m1"), n);
  const OrderFunction m2 = order_function_from(cfg.require("m2"), n);
  Outcome o;
  const auto s1 = as_separable(m1), s2 = as_separable(m2);
  std::optional<BoundDescriptor> fast;
  if (s1 && s2) {
    fast = separable_compose(*s1, *s2, n);  // throws DivergenceError
    o.result["path"] = "separable";
    o.result["separable"] = {{"exponent", fast->exponent},
                             {"log_factor", fast->log_factor},
                             {"simplified", fast->simplified}};
  } else {
    o.result["path"] = "generic";
  }

  // Quadrature values at (z, z*). Without explicit points the generic path samples z = 0 along a
  // ray in z* and fits the exponent of <z*>.
  const bool explicit_points = cfg.body.contains("points");
  const bool run_quadrature = !fast || explicit_points || cfg.body.value("cross_check", false);
  if (run_quadrature) {
    std::vector<std::pair<Vec, Vec>> pts;
    if (explicit_points) {
      for (const auto& p : cfg.body["points"])
        pts.emplace_back(vec_from(p.at("z"), 2 * n, "z"), vec_from(p.at("zs"), 2 * n, "zs"));
    } else {
      for (double r : {10.0, 20.0, 40.0, 80.0}) {
        Vec zs = Vec::Zero(2 * n);
        zs[0] = 0.8 * r;
        zs[1] = 0.6 * r;
        pts.emplace_back(Vec::Zero(2 * n), zs);
      }
    }
    json values = json::array();
    std::vector<double> lr, lv;
    for (const auto& [z, zs] : pts) {
      const ComposeResult c = compose(m1, m2, z, zs);
      if (!c.finite) throw DivergenceError("composition integral diverges");
      values.push_back({{"z", vec_json(z)}, {"zs", vec_json(zs)}, {"value", c.value},
                        {"refinement_gap", c.integral.refinement_gap}, {"tail", c.integral.tail}});
      lr.push_back(std::log(std::sqrt(1.0 + zs.squaredNorm())));
      lv.push_back(std::log(c.value));
    }
    o.result["quadrature"] = values;
    if (!explicit_points) {
      const double slope = fitted_slope(lr, lv);
      o.result["fitted_exponent"] = slope;
      if (fast && !fast->log_factor) {
        const double tol = cfg.tol_or(0.1);
        const bool agree = std::abs(slope - fast->exponent) <= tol;
        o.result["paths_agree"] = agree;
        if (!agree) o.code = kInconsistent;
      }
    }
  }
  o.summary = fast ? "separable exponent " + std::to_string(fast->exponent) + (fast->log_factor ? " with log factor" : "")
                   : "generic quadrature";
  return o;
}

struct SymbolJob {
  GridSpec grid;
  GridSymbol symbol;
};

// Symbols for membership live on E: 2n copies of the job grid.
SymbolJob phase_symbol(const JobConfig& cfg, const char* key, int default_points) {
  SymbolJob s;
  s.grid = cfg.grid_or(default_points);
  s.symbol = symbol_from(cfg.require(key), cfg, std::vector<GridSpec>(2 * cfg.n(), s.grid));
  return s;
}

// Symbols for quantization live on the canonical symbol grid of the job's position grid.
SymbolJob weyl_symbol(const JobConfig& cfg, const char* key, int default_points) {
  SymbolJob s;
  s.grid = cfg.grid_or(default_points);
  s.symbol = symbol_from(cfg.require(key), cfg, symbol_axes(s.grid, cfg.n()));
  return s;
}

Outcome certify_symbol(const JobConfig& cfg) {
  const int n = cfg.n();
  const OrderFunction m = order_function_from(cfg.require("m"), n);
  const SymbolJob sj = phase_symbol(cfg, "symbol", 64);
  const std::string mode = cfg.body.value("mode", std::string("all"));
  const double tol = cfg.tol_or(1e-8);
  Outcome o;
  json reports;
  std::vector<std::pair<std::string, bool>> verdicts;
  auto record = [&](const MembershipReport& r) {
    reports[r.mode] = r.to_json();
    verdicts.emplace_back(r.mode, r.member);
  };
  if (mode == "lattice" || mode == "all") {
    const auto& lc = cfg.body.value("lattice", json::object());
    const WindowFamily w =
        build_partition(Lattice::integer(4 * n, lc.value("spacing", 2.0)), lc.value("width", 1.0));
    StildeOptions so;
    so.boundary_tol = tol;
    if (cfg.body.contains("B"))
      record(bspace_stilde_norm(sj.symbol, m, w, SeqSpaceSpec::from_json(cfg.body["B"]), so));
    else
      record(stilde_norm(sj.symbol, m, w, so));
  }
  if (mode == "stft" || mode == "all") {
    const auto& sc = cfg.body.value("stft", json::object());
    record(stft_membership(sj.symbol, m,
                           build_partition(Lattice::integer(2 * n, sc.value("spacing", 2.0)), sc.value("width", 2.0))));
  }
  if (mode == "bargmann" || mode == "all") {
    BargmannMembershipOptions bo;
    bo.stride = cfg.body.value("stride", 2);
    bo.boundary_tol = tol;
    record(membership_via_bargmann(sj.symbol, m, BargmannSetup::standard(2 * n), bo));
  }
  if (verdicts.empty()) throw InputError("mode must be lattice, stft, bargmann or all");
  bool agree = true;
  for (const auto& v : verdicts) agree = agree && v.second == verdicts.front().second;
  o.result = {{"grid", grid_to_json(sj.grid)}, {"order_function", m.to_json()}, {"modes", reports},
              {"member", verdicts.front().second}, {"modes_agree", agree}};
  o.code = agree ? kPass : kInconsistent;
  o.summary = std::string(verdicts.front().second ? "member" : "not a member");
  for (const auto& v : verdicts) o.summary += " " + v.first + "=" + (v.second ? "yes" : "no");
  if (!agree) o.summary += " (modes DISAGREE)";
  return o;
}

Outcome quantize_cmd(const JobConfig& cfg) {
  const SymbolJob sj = weyl_symbol(cfg, "symbol", 48);
  const WeylOperator op = weyl_quantize(sj.symbol, sj.grid);
  Outcome o;
  const double fro = op.matrix.norm();
  const double herm = (op.matrix - op.matrix.adjoint()).norm() / std::max(fro, 1e-300);
  o.result = {{"grid", grid_to_json(sj.grid)},
              {"rows", op.matrix.rows()},
              {"frobenius", fro},
              {"operator_norm", cp_norm(op.matrix, std::numeric_limits<double>::infinity())},
              {"hermitian_defect", herm}};
  if (cfg.body.contains("operator_out")) {
    const std::string path = cfg.resolve(cfg.body["operator_out"].get<std::string>());
    write_weyl_operator(op, path);
    o.result["operator_file"] = cfg.body["operator_out"];
  }
  o.summary = "quantized on N = " + std::to_string(sj.grid.points) + ", |a^w|_op = " +
              std::to_string(o.result["operator_norm"].get<double>());
  return o;
}

Outcome moyal_cmd(const JobConfig& cfg) {
  const SymbolJob a = weyl_symbol(cfg, "a", 48);
  const SymbolJob b = weyl_symbol(cfg, "b", 48);
  MoyalOptions mo;
  mo.alias_tol = cfg.tol_or(mo.alias_tol);
  const GridSymbol ab = moyal_product(a.symbol, b.symbol, mo);
  Outcome o;
  o.result = {{"grid", grid_to_json(a.grid)}, {"sup_product", ab.max_abs()}, {"boundary_product", ab.boundary_max()}};
  if (cfg.body.value("check_operator", true)) {
    const CMat lhs = weyl_quantize(ab, a.grid).matrix;
    const CMat rhs = weyl_quantize(a.symbol, a.grid).matrix * weyl_quantize(b.symbol, b.grid).matrix;
    const double rel = (lhs - rhs).norm() / std::max(rhs.norm(), 1e-300);
    o.result["operator_relative_frobenius"] = rel;
  }
  if (cfg.body.contains("product_out")) {
    write_grid_symbol(ab, cfg.resolve(cfg.body["product_out"].get<std::string>()));
    o.result["product_file"] = cfg.body["product_out"];
  }
  o.summary = "a#b computed, sup " + std::to_string(ab.max_abs());
  if (o.result.contains("operator_relative_frobenius"))
    o.summary += ", operator check " + std::to_string(o.result["operator_relative_frobenius"].get<double>());
  return o;
}

Outcome bound_cmd(const JobConfig& cfg) {
  const int n = cfg.n();
  const OrderFunction m = order_function_from(cfg.require("m"), n);
  const std::string target = cfg.require("target").get<std::string>();
  Outcome o;
  o.result["target"] = target;
  if (target == "l2_schur") {
    const SchurResult s = schur_certificate(m);
    if (!s.finite) throw DivergenceError("Schur integrals diverge (decay degree " + std::to_string(s.degree) + ")");
    o.result["row_sup"] = s.row_sup;
    o.result["col_sup"] = s.col_sup;
    o.result["bound"] = std::sqrt(s.row_sup * s.col_sup);
    o.summary = "L2 bound " + std::to_string(std::sqrt(s.row_sup * s.col_sup));
  } else if (target == "l1_fiber") {
    const FiberResult f = l1_fiber_certificate(m);
    if (!f.finite) throw DivergenceError("fibre integral diverges");
    o.result["bound"] = f.value;
    o.result["refinement_gap"] = f.integral.refinement_gap;
    o.result["truncation_radius"] = f.integral.radius;
    o.summary = "fibre bound " + std::to_string(f.value);
  } else if (target == "cp") {
    const double p = cfg.body.value("p", 1.0);
    const CpCriterionResult crit = cp_criterion_integral(m, p);
    if (!crit.finite) throw DivergenceError("C_p criterion integral diverges: " + crit.reason);
    const DiagonalBound db = diagonal_cp_bound(m, Lattice::integer(2 * n, 1.0), p);
    if (!db.finite) throw DivergenceError("diagonal C_p bound diverges");
    o.result["p"] = inf_safe(p);
    o.result["criterion_integral"] = crit.value;
    o.result["diagonal_bound"] = db.to_json();
    o.summary = "diagonal C_p bound " + std::to_string(db.value);
    if (cfg.body.contains("symbol")) {
      const SymbolJob sj = weyl_symbol(cfg, "symbol", 48);
      if (sj.grid.points > 128) throw BudgetError("measured C_p norms are limited to grids with N <= 128");
      CpBoundOptions co;
      co.p = p;
      co.constant = cfg.body.value("constant", 0.0);
      const CpBoundReport r = cp_bound_check(sj.symbol, sj.grid, m, build_partition(Lattice::integer(4 * n, 2.0), 1.0),
                                             Lattice::integer(2 * n, 1.0), co);
      o.result["measured"] = r.to_json();
      if (!r.holds) o.code = kViolation;
      o.summary += ", measured " + std::to_string(r.measured) + " (ratio " + std::to_string(r.ratio) + ")";
    }
  } else {
    throw InputError("target must be l2_schur, l1_fiber or cp");
  }
  return o;
}

Outcome accept_cmd(const JobConfig& cfg, const std::vector<int>& only) {
  AcceptanceOptions ao;
  ao.seed = cfg.seed;
  ao.only = only;
  ao.on_result = [](const CriterionResult& r) { std::cerr << format_result(r) << std::endl; };
  Outcome o;
  int passed = 0;
  json list = json::array();
  const auto results = run_acceptance(ao);
  for (const auto& r : results) {
    passed += r.passed;
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"summary", r.summary}, {"data", r.data}});
  }
  o.result = {{"criteria", list}, {"passed", passed}, {"total", results.size()}};
  o.code = passed == static_cast<int>(results.size()) ? kPass : kViolation;
  o.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed";
  return o;
}

void emit(const JobConfig& cfg, const json& report) {
  const std::string text = dump_json(report) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InputError("cannot write " + cfg.out);
  out << text;
}

}  // namespace
}  // namespace wsym::cli

int main(int argc, char** argv) {
  using namespace wsym;
  using namespace wsym::cli;

  CLI::App app{"wsym: numerical phase-space calculus toolkit"};
  app.require_subcommand(1);
  std::string config_path, out_path, grid_text;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::vector<int> only;
  app.add_option("--config", config_path, "job configuration (JSON)")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--grid", grid_text, "position grid as N or N,L");
  app.add_option("--tol", tol, "tolerance of the command's main check")->check(CLI::PositiveNumber);
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"certify-order", "certify the order-function axiom"},
      {"compose", "compose two order functions"},
      {"certify-symbol", "test symbol class membership"},
      {"quantize", "Weyl quantize a symbol"},
      {"moyal", "Moyal product of two symbols"},
      {"bound", "operator bound certificates"},
      {"accept", "run the acceptance suite"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name == "accept") sub->add_option("--only", only, "criterion ids to run");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    JobConfig cfg = JobConfig::load(command, config_path);
    if (seed) cfg.seed = *seed;
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
    if (tol) cfg.tol = *tol;
    cfg.out = out_path;

    Outcome o;
    if (command == "certify-order") o = certify_order(cfg);
    else if (command == "compose") o = compose_cmd(cfg);
    else if (command == "certify-symbol") o = certify_symbol(cfg);
    else if (command == "quantize") o = quantize_cmd(cfg);
    else if (command == "moyal") o = moyal_cmd(cfg);
    else if (command == "bound") o = bound_cmd(cfg);
    else o = accept_cmd(cfg, only);

    nlohmann::json report = {{"command", command},
                             {"config", cfg.canonical()},
                             {"config_hash", cfg.hash()},
                             {"versions", versions()},
                             {"exit_code", o.code},
                             {"result", o.result}};
    emit(cfg, report);
    std::cerr << command << ": " << o.summary << std::endl;
    return o.code;
  } catch (const DivergenceError& e) {
    std::cerr << command << ": divergent: " << e.what() << std::endl;
    return kDivergence;
  } catch (const ViolationError& e) {
    std::cerr << command << ": violation: " << e.what() << std::endl;
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << command << ": error: " << e.what() << std::endl;
    return kInput;
  }
}
