// Copyright 2026 The gaugekit authors
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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gaugekit/errors.hpp"
#include "gaugekit/io.hpp"
#include "gaugekit/solve.hpp"

using namespace gaugekit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFalse = 1;
constexpr int kExitSchema = 2;
constexpr int kExitModuleError = 3;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << canonical_dump(j);
  } else {
    write_json_file(out_path, j);
  }
}

unsigned long effective_seed(unsigned long cli_seed) {
  if (const char* env = std::getenv("GAUGEKIT_SEED")) {
    return std::strtoul(env, nullptr, 10);
  }
  return cli_seed;
}

Vector point_or_empty(const std::optional<Vector>& v, int expected,
                      const char* name) {
  if (!v) {
    require(expected == 0, ErrorCode::SchemaError,
            std::string("point file: missing \"") + name + "\"");
    return Vector(0);
  }
  require(static_cast<int>(v->size()) == expected, ErrorCode::SchemaError,
          std::string("point file: \"") + name + "\" has length " +
              std::to_string(v->size()) + ", expected " +
              std::to_string(expected));
  return *v;
}

const Problem& primal_problem(const ProblemFile& pf, const char* cmd) {
  require(pf.problem.has_value(), ErrorCode::InvalidArgument,
          std::string(cmd) + " expects a gauge or pho problem file");
  require(pf.form == ProblemForm::Primal, ErrorCode::InvalidArgument,
          std::string(cmd) + " expects a primal-form file");
  return *pf.problem;
}

int cmd_validate(const std::string& path) {
  Json raw;
  ProblemFile pf;
  try {
    raw = read_json_file(path);
    pf = parse_problem_json(raw);
  } catch (const Error& e) {
    std::cout << "schema: invalid (" << e.what() << ")\n";
    return kExitSchema;
  }
  std::cout << "schema: ok (kind " << pf.kind << ")\n";

  bool assumptions_ok = true;
  if (pf.convex) {
    const ConvexProblem& cp = *pf.convex;
    std::cout << "dims: n=" << cp.n() << " k=" << cp.k() << " l=" << cp.l()
              << " m=" << cp.m() << "\n";
    for (int i = 0; i < cp.m(); ++i) {
      ExtReal lo = convex_min_value(cp.f[i]);
      std::cout << "block " << (i + 1) << ": convex, min value "
                << (lo.is_finite() ? std::to_string(lo.value()) : "-inf")
                << (lo.is_finite() && lo.value() >= -1e-9
                        ? " (nonnegative)"
                        : " (needs decomposition before perspective lifting)")
                << "\n";
    }
    return kExitOk;
  }

  const Problem& prob = *pf.problem;
  std::cout << "dims: n=" << prob.n() << " k=" << prob.k() << " l=" << prob.l()
            << " m=" << prob.m() << "\n";
  if (pf.form != ProblemForm::Primal) {
    std::cout << "form: "
              << (pf.form == ProblemForm::DualForm ? "dual of " : "double dual of ")
              << pf.provenance.begin().value().get<std::string>() << "\n";
  }

  // convexity: d and K nonnegative
  std::string convexity_detail;
  for (int i = 0; i < prob.m(); ++i) {
    if (prob.d(i) < 0.0) {
      convexity_detail = "d[" + std::to_string(i + 1) +
                         "] = " + std::to_string(prob.d(i));
      break;
    }
  }
  if (convexity_detail.empty()) {
    for (int r = 0; r < prob.l() && convexity_detail.empty(); ++r) {
      for (int i = 0; i < prob.m(); ++i) {
        if (prob.K(r, i) < 0.0) {
          convexity_detail = "K[" + std::to_string(r + 1) + "," +
                             std::to_string(i + 1) +
                             "] = " + std::to_string(prob.K(r, i));
          break;
        }
      }
    }
  }
  if (convexity_detail.empty()) {
    std::cout << "convexity (d, K nonnegative): satisfied\n";
  } else {
    std::cout << "convexity (d, K nonnegative): violated (" << convexity_detail
              << ")\n";
    assumptions_ok = false;
  }

  std::cout << "lower semicontinuity: satisfied (catalogue gauges are closed)\n";

  for (int i = 0; i < prob.m(); ++i) {
    const bool definite = vanishes_only_at_origin(prob.gauge.specs[i]);
    const bool monotone = prob.block_monotone(i);
    const bool full_nontrivial = prob.block_full_domain_nontrivial(i);
    std::cout << "block " << (i + 1)
              << ": definite (vanishes only at origin): " << (definite ? "yes" : "no")
              << "; dual-equivalence condition: "
              << (monotone ? "monotone coefficients"
                           : (full_nontrivial ? "full domain, not identically zero"
                                              : "VIOLATED"))
              << "\n";
    if (!monotone && !full_nontrivial) assumptions_ok = false;
  }

  if (pf.form == ProblemForm::Primal) {
    auto slater = find_slater_point(prob);
    if (slater) {
      std::cout << "slater point: found (probe)\n";
    } else {
      std::cout << "slater point: not found (probe; not a proof of absence)\n";
    }
  }
  return assumptions_ok ? kExitOk : kExitVerdictFalse;
}

int cmd_dualize(const std::string& path, const std::string& out) {
  Json src = read_json_file(path);
  emit(dualize_json(src), out);
  return kExitOk;
}

int cmd_certify(const std::string& prob_path, const std::string& point_path,
                const std::string& out, double tol) {
  ProblemFile pf = load_problem_file(prob_path);
  const Problem& prob = primal_problem(pf, "certify");
  PointFile pt = load_point_file(point_path);
  require(pt.x.has_value(), ErrorCode::SchemaError,
          "certify needs a primal point \"x\" in the point file");
  Vector x = point_or_empty(pt.x, prob.n(), "x");
  DualPoint dp{point_or_empty(pt.u, prob.k(), "u"),
               point_or_empty(pt.v, prob.l(), "v")};
  OptimalityReport rep =
      check_optimality(prob, make_primal_point(prob, x), dp, tol);
  emit(report_to_json(rep), out);
  return rep.verdict ? kExitOk : kExitVerdictFalse;
}

int cmd_recover(const std::string& prob_path, const std::string& point_path,
                const std::string& out, double tol) {
  ProblemFile pf = load_problem_file(prob_path);
  const Problem& prob = primal_problem(pf, "recover");
  PointFile pt = load_point_file(point_path);
  DualKKTPoint kkt;
  kkt.u = point_or_empty(pt.u, prob.k(), "u");
  kkt.v = point_or_empty(pt.v, prob.l(), "v");
  require(pt.lambda.has_value(), ErrorCode::SchemaError,
          "recover needs \"lambda\" in the point file");
  kkt.lambda = point_or_empty(pt.lambda, prob.m(), "lambda");
  kkt.mu = point_or_empty(pt.mu, prob.l(), "mu");
  kkt.x_bar_blocks = pt.x_bar_blocks;

  RecoveryResult rec = recover_primal(prob, kkt, tol);
  Json j;
  j["x_star"] = vector_to_json(rec.x_star.x);
  Json gv = Json::array();
  for (const auto& v : rec.x_star.gauge_values) gv.push_back(v.value());
  j["gauge_values"] = gv;
  j["report"] = report_to_json(rec.report);
  emit(j, out);
  return rec.report.verdict ? kExitOk : kExitVerdictFalse;
}

int cmd_solve(const std::string& prob_path, const std::string& method,
              int iters, double rho, unsigned long seed, double box, int grid,
              bool polish, const std::string& out) {
  ProblemFile pf = load_problem_file(prob_path);
  Json j;

  if (method == "oracle") {
    OracleOptions opts;
    opts.box = box;
    opts.grid_points_per_dim = grid;
    SolveResult res;
    if (pf.convex) {
      res = oracle_solve_convex(*pf.convex, opts);
      j = solve_result_to_json(res);  // convex_objective already adds the offset
    } else if (pf.form == ProblemForm::DoubleDualForm) {
      res = oracle_solve_epigraph(build_double_dual(*pf.problem), opts);
      j = solve_result_to_json(res, pf.objective_offset);
    } else {
      require(pf.form == ProblemForm::Primal, ErrorCode::InvalidArgument,
              "the oracle solves primal-form files (dual-form files describe a"
              " maximization; solve the primal file instead)");
      res = oracle_solve_primal(*pf.problem, opts);
      j = solve_result_to_json(res, pf.objective_offset);
    }
    emit(j, out);
    return (res.status == SolveStatus::ToleranceReached ||
            res.status == SolveStatus::Optimal)
               ? kExitOk
               : kExitVerdictFalse;
  }

  require(method == "subgradient", ErrorCode::InvalidArgument,
          "--method must be oracle or subgradient");
  require(pf.problem.has_value(), ErrorCode::InvalidArgument,
          "subgradient solves gauge/pho problem files");
  require(pf.form == ProblemForm::Primal, ErrorCode::InvalidArgument,
          "subgradient expects a primal-form file; its output is the dual"
          " point of that problem");
  const Problem& prob = *pf.problem;

  SubgradientOptions sopts;
  sopts.iters = iters;
  sopts.rho = rho;
  sopts.seed = seed;
  SolveResult res = solve_dual_subgradient(prob, sopts);
  if (polish && res.dual) {
    SolveResult refined = polish_dual(prob, *res.dual, {});
    if (refined.dual && refined.status != SolveStatus::Infeasible) {
      refined.iterations += res.iterations;
      res = refined;
    }
  }

  bool verdict_ok = true;
  if (res.dual) {
    DualKKTPoint kkt = extract_kkt(prob, *res.dual);
    j["kkt"] = Json{{"lambda", vector_to_json(kkt.lambda)},
                    {"mu", vector_to_json(kkt.mu)},
                    {"residual", kkt_residual_to_json(kkt_residual(prob, kkt))}};
    bool recoverable = prob.is_convex();
    for (int i = 0; i < prob.m(); ++i) {
      recoverable = recoverable && vanishes_only_at_origin(prob.gauge.specs[i]);
    }
    if (recoverable) {
      try {
        RecoveryResult rec = recover_primal(prob, kkt, 1e-6);
        res.certificate = rec.report;
        res.status = SolveStatus::Optimal;
        j["recovered_x"] = vector_to_json(rec.x_star.x);
        j["recovered_objective"] =
            primal_objective(prob, rec.x_star).value() + pf.objective_offset;
      } catch (const Error& e) {
        j["recovery_error"] = std::string(e.what());
        verdict_ok = false;
      }
    }
  }
  Json base = solve_result_to_json(res, pf.objective_offset);
  for (auto it = j.begin(); it != j.end(); ++it) base[it.key()] = it.value();
  emit(base, out);
  if (res.certificate && !res.certificate->verdict) verdict_ok = false;
  return (verdict_ok && res.dual) ? kExitOk : kExitVerdictFalse;
}

int cmd_perspective(const std::string& prob_path, const std::string& out_primal,
                    const std::string& out_dual) {
  Json src_json = read_json_file(prob_path);
  ProblemFile pf = parse_problem_json(src_json);
  require(pf.convex.has_value(), ErrorCode::InvalidArgument,
          "perspective expects a convex-kind problem file");

  ConvexProblem cp = *pf.convex;
  bool folded = false;
  for (int i = 0; i < cp.m(); ++i) {
    ExtReal lo = convex_min_value(cp.f[i]);
    if (lo.is_neg_inf() || lo.value() < -kDefaultTol) {
      folded = true;
      break;
    }
  }
  if (folded) cp = fold_to_nonnegative(cp).shifted;

  PerspectiveProblem pp = build_perspective_problem(cp);
  Json prov;
  prov["perspective_of"] = content_hash(src_json);
  if (folded) prov["folded_linear_parts"] = true;
  Json primal_json = problem_to_json(pp.lifted, cp.objective_offset, prov);
  emit(primal_json, out_primal);
  if (!out_dual.empty()) {
    emit(dualize_json(primal_json), out_dual);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gaugekit: modeling, dualization, certification and recovery for"
      " optimization with block-separable gauges"};
  app.require_subcommand(1);

  std::string path, point_path, out, out_dual;
  std::string method = "subgradient";
  double tol = kCertTol;
  int iters = 50000, grid = 61;
  double rho = 0.0, box = 3.0;
  unsigned long seed = 1;
  bool no_polish = false;

  auto* validate = app.add_subcommand("validate", "check a problem file");
  validate->add_option("file", path)->required();

  auto* dualize = app.add_subcommand("dualize", "emit the dual problem file");
  dualize->add_option("file", path)->required();
  dualize->add_option("-o,--out", out, "output path (stdout when omitted)");

  auto* certify = app.add_subcommand(
      "certify", "check the five optimality conditions for a primal/dual pair");
  certify->add_option("problem", path)->required();
  certify->add_option("point", point_path)->required();
  certify->add_option("-o,--out", out);
  certify->add_option("--tol", tol, "residual tolerance");

  auto* recover = app.add_subcommand(
      "recover", "assemble a primal solution from a dual KKT point");
  recover->add_option("problem", path)->required();
  recover->add_option("point", point_path)->required();
  recover->add_option("-o,--out", out);
  recover->add_option("--tol", tol, "residual tolerance");

  auto* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("problem", path)->required();
  solve->add_option("--method", method, "oracle | subgradient");
  solve->add_option("--iters", iters);
  solve->add_option("--rho", rho, "penalty parameter (0: automatic)");
  solve->add_option("--seed", seed, "restart seed (env GAUGEKIT_SEED overrides)");
  solve->add_option("--box", box, "oracle grid half-width");
  solve->add_option("--grid", grid, "oracle grid points per dimension");
  solve->add_flag("--no-polish", no_polish,
                  "skip the cutting-plane refinement after the subgradient run");
  solve->add_option("-o,--out", out);

  auto* perspective = app.add_subcommand(
      "perspective", "lift a convex problem to its perspective form and dual");
  perspective->add_option("problem", path)->required();
  perspective->add_option("--out-primal", out, "lifted problem output")->required();
  perspective->add_option("--out-dual", out_dual, "perspective dual output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (dualize->parsed()) return cmd_dualize(path, out);
    if (certify->parsed()) return cmd_certify(path, point_path, out, tol);
    if (recover->parsed()) return cmd_recover(path, point_path, out, tol);
    if (solve->parsed()) {
      return cmd_solve(path, method, iters, rho, effective_seed(seed), box,
                       grid, !no_polish, out);
    }
    if (perspective->parsed()) return cmd_perspective(path, out, out_dual);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::SchemaError ? kExitSchema : kExitModuleError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModuleError;
  }
  return kExitOk;
}
