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
//
// Acceptance suite: one pass/fail line per criterion. Every tolerance is
// pinned here, in code. The suite exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gaugekit/certify.hpp"
#include "gaugekit/gridscan.hpp"
#include "gaugekit/io.hpp"
#include "gaugekit/recover.hpp"
#include "gaugekit/solve.hpp"
#include "support/instance_gen.hpp"

using namespace gaugekit;
using testing::GaugeInstance;
using testing::InstanceOptions;

namespace {

std::string g_cli_path;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Solved state shared by criteria 2, 6 and 7.
struct SolvedInstance {
  GaugeInstance gi;
  SolveResult oracle;
  SolveResult dual;  // subgradient warm start refined by cutting planes
};

std::vector<SolvedInstance> g_solved;

// ---------------------------------------------------------------------------
// 1. Weak duality fuzzing: 100 instances x 100 feasible pairs, primal
//    objective >= dual objective - 1e-9 in all 10,000 cases, <= 30 s.
// ---------------------------------------------------------------------------
Outcome criterion_weak_duality() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  long checked = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int inst = 0; inst < 100; ++inst) {
    GaugeInstance gi = testing::random_convex_gauge_instance(rng);
    for (int t = 0; t < 100; ++t) {
      Vector x = testing::sample_feasible_primal(gi.prob, gi.slater, rng, 2.0);
      DualPoint dp = testing::sample_feasible_dual(gi.prob, rng, 2.0);
      const double primal =
          primal_objective(gi.prob, make_primal_point(gi.prob, x)).value();
      const double dual = dual_objective(gi.prob, dp);
      worst = std::min(worst, primal - dual);
      ++checked;
      if (primal < dual - 1e-9) {
        return {false, "violated by " + fmt(dual - primal) + " after " +
                           std::to_string(checked) + " pairs"};
      }
    }
  }
  const double sec = seconds_since(t0);
  if (sec > 30.0) return {false, "took " + fmt(sec) + " s (> 30 s)"};
  return {true, std::to_string(checked) + " pairs, min gap " + fmt(worst) +
                    ", " + fmt(sec) + " s"};
}

// ---------------------------------------------------------------------------
// 2. Strong duality: 25 instances with a verified Slater point,
//    |oracle primal - dual (subgradient + cutting planes)| <= 2e-3, <= 5 min.
// ---------------------------------------------------------------------------
Outcome criterion_strong_duality() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(2002);
  g_solved.clear();
  double worst = 0.0;
  while (static_cast<int>(g_solved.size()) < 25) {
    GaugeInstance gi = testing::random_convex_gauge_instance(rng);
    auto slater = find_slater_point(gi.prob);
    if (!slater) continue;  // verified Slater point required

    OracleOptions oopts;
    oopts.grid_points_per_dim = 61;
    oopts.refine_levels = 4;
    SolveResult oracle = oracle_solve_primal(gi.prob, oopts);
    if (oracle.status != SolveStatus::ToleranceReached) continue;

    SubgradientOptions sopts;
    sopts.iters = 40000;
    SolveResult sg = solve_dual_subgradient(gi.prob, sopts);
    SolveResult dual = polish_dual(gi.prob, *sg.dual, {});
    if (!dual.dual) return {false, "dual refinement lost the iterate"};

    const double gap = std::abs(oracle.objective - dual.objective);
    worst = std::max(worst, gap);
    if (gap > 2e-3) {
      return {false, "instance " + std::to_string(g_solved.size()) +
                         ": |primal - dual| = " + fmt(gap) + " > 2e-3"};
    }
    g_solved.push_back({std::move(gi), std::move(oracle), std::move(dual)});
  }
  const double sec = seconds_since(t0);
  if (sec > 300.0) return {false, "took " + fmt(sec) + " s (> 5 min)"};
  return {true, "25 instances, max |primal - dual| " + fmt(worst) + ", " +
                    fmt(sec) + " s"};
}

// ---------------------------------------------------------------------------
// 3. Polar involution: ||g°°(x) - g(x)|| <= 1e-9 on 1000 points per norm
//    family gauge.
// ---------------------------------------------------------------------------
Outcome criterion_involution() {
  Rng rng(3003);
  std::vector<GaugeSpec> gs;
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfExponent}) {
    for (int dim : {1, 2, 4}) gs.push_back(make_pnorm(p, dim));
  }
  for (double p : {1.0, 1.4, 2.0, kInfExponent}) {
    Vector w(3);
    w << 0.6, 2.2, 1.1;
    gs.push_back(make_weighted_pnorm(p, w));
  }
  double worst = 0.0;
  for (const GaugeSpec& g : gs) {
    GaugeSpec gpp = polar_spec(polar_spec(g));
    for (int t = 0; t < 1000; ++t) {
      Vector x = rng.gaussian(g.dim(), 2.5);
      const double err = std::abs(eval(g, x).value() - eval(gpp, x).value());
      worst = std::max(worst, err);
      if (err > 1e-9) {
        return {false, "involution error " + fmt(err) + " > 1e-9"};
      }
    }
  }
  return {true, std::to_string(gs.size()) + " gauges x 1000 points, max error " +
                    fmt(worst)};
}

// ---------------------------------------------------------------------------
// 4. Hoelder-type inequality: 10,000 pairs per gauge family,
//    g(x) g°(y) >= x^T y - 1e-9 whenever both factors are finite.
// ---------------------------------------------------------------------------
Outcome criterion_hoelder() {
  Rng rng(4004);
  Vector w(3);
  w << 0.5, 1.5, 2.5;
  Matrix G(4, 3);
  G << 1, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, -1;
  Matrix M(2, 3);
  M << 1, 1, 0, 0, 1, 1;
  struct Family {
    const char* name;
    GaugeSpec g;
  };
  std::vector<Family> families;
  families.push_back({"pnorm", make_pnorm(1.0, 3)});
  families.push_back({"pnorm", make_pnorm(2.0, 3)});
  families.push_back({"pnorm", make_pnorm(kInfExponent, 3)});
  families.push_back({"weighted", make_weighted_pnorm(2.0, w)});
  families.push_back({"scaled", make_scaled(1.7, make_pnorm(1.0, 3))});
  families.push_back({"polyhedral", make_polyhedral(G)});
  families.push_back({"cone", make_halfspace_cone_indicator(M)});
  long finite_pairs = 0;
  for (const Family& fam : families) {
    for (int t = 0; t < 10000; ++t) {
      Vector x = rng.gaussian(3, 2.0);
      Vector y = rng.gaussian(3, 2.0);
      ExtReal gx = eval(fam.g, x);
      ExtReal gy = eval_polar(fam.g, y);
      if (!gx.is_finite() || !gy.is_finite()) continue;
      ++finite_pairs;
      if (gx.value() * gy.value() < x.dot(y) - 1e-9) {
        return {false, std::string(fam.name) + ": product " +
                           fmt(gx.value() * gy.value()) + " < x.y " +
                           fmt(x.dot(y))};
      }
    }
  }
  return {true, std::to_string(finite_pairs) + " finite pairs over " +
                    std::to_string(families.size()) + " families"};
}

// ---------------------------------------------------------------------------
// 5. Lagrangian equivalence: witnesses push L below -1e6 at some t <= 1e8
//    for infeasible dual points; grid infima match the closed form omega on
//    feasible ones.
// ---------------------------------------------------------------------------
Outcome criterion_lagrangian() {
  Rng rng(5005);
  InstanceOptions opt;
  opt.max_n = 3;  // keeps the x-grid cross-check dense
  int witnesses = 0, feasible_checks = 0;
  for (int inst = 0; inst < 50; ++inst) {
    GaugeInstance gi = testing::random_convex_gauge_instance(rng, opt);
    if (gi.prob.k() == 0) {  // no u to push infeasible; draw another
      --inst;
      continue;
    }
    for (int t = 0; t < 20; ++t) {
      auto dp = testing::sample_infeasible_dual(gi.prob, rng, 0.1);
      if (!dp) return {false, "could not sample an infeasible dual point"};
      UnboundednessWitness w = unboundedness_witness(gi.prob, *dp);
      const double t_star =
          std::min(1e8, (1e6 + std::abs(dual_objective(gi.prob, *dp)) + 10.0) /
                            w.slope * 1.5);
      const double lv =
          lagrangian_value(gi.prob,
                           make_primal_point(gi.prob, w.point_at(t_star)), *dp)
              .value();
      if (!(lv < -1e6)) {
        return {false, "witness reached only L = " + fmt(lv) + " at t = " +
                           fmt(t_star)};
      }
      ++witnesses;
    }
    GridSpec spec{Vector::Constant(gi.prob.n(), -3.0),
                  Vector::Constant(gi.prob.n(), 3.0), 21};
    for (int t = 0; t < 20; ++t) {
      DualPoint dp = testing::sample_feasible_dual(gi.prob, rng, 1.5);
      ExtReal omega = lagrangian_dual_value(gi.prob, dp);
      if (!omega.is_finite()) return {false, "feasible sample lost feasibility"};
      GridBest gb = grid_scan_parallel(spec, [&](const Vector& x) {
        ExtReal v = lagrangian_value(gi.prob, make_primal_point(gi.prob, x), dp);
        return v.is_finite() ? v.value()
                             : std::numeric_limits<double>::infinity();
      });
      // 0 lies on the grid where L = omega; all grid values satisfy L >= omega
      if (std::abs(gb.value - omega.value()) > 1e-9) {
        return {false, "grid inf " + fmt(gb.value) + " vs omega " +
                           fmt(omega.value())};
      }
      ++feasible_checks;
    }
  }
  return {true, std::to_string(witnesses) + " witnesses, " +
                    std::to_string(feasible_checks) + " grid infima"};
}

// ---------------------------------------------------------------------------
// 6. Optimality-condition chain on the criterion-2 instances: the solver's
//    optimal pair passes all five conditions at 1e-5, and the gap identity
//    holds to 1e-8 at sampled feasible pairs.
// ---------------------------------------------------------------------------
Outcome criterion_conditions() {
  if (g_solved.empty()) return {false, "criterion 2 did not run"};
  Rng rng(6006);
  double worst_resid = 0.0, worst_identity = 0.0;
  for (const SolvedInstance& si : g_solved) {
    const Problem& prob = si.gi.prob;
    DualKKTPoint kkt = extract_kkt(prob, *si.dual.dual);
    RecoveryResult rec = recover_primal(prob, kkt, 1e-5);
    OptimalityReport rep =
        check_optimality(prob, rec.x_star, *si.dual.dual, 1e-5);
    if (!rep.verdict) return {false, "five-condition check failed at 1e-5"};
    worst_resid = std::max(
        {worst_resid, rep.primal_feas.eq_residual, rep.primal_feas.ineq_violation,
         rep.comp_gauge.size() ? rep.comp_gauge.maxCoeff() : 0.0,
         rep.comp_ineq.size() ? rep.comp_ineq.maxCoeff() : 0.0,
         rep.alignment_residual});

    for (int t = 0; t < 20; ++t) {
      Vector x = testing::sample_feasible_primal(prob, si.gi.slater, rng, 1.5);
      DualPoint dp = testing::sample_feasible_dual(prob, rng, 1.5);
      PrimalPoint pt = make_primal_point(prob, x);
      DualSlack ds = dual_slack(prob, dp);
      const double gap =
          primal_objective(prob, pt).value() - dual_objective(prob, dp);
      Vector gv(prob.m());
      double comp_gauge = 0.0, comp_ineq = 0.0, pairing = 0.0;
      for (int i = 0; i < prob.m(); ++i) {
        gv(i) = pt.gauge_values[i].value();
        comp_gauge += ds.slack[i].value() * gv(i);
        pairing += ds.polar_values[i].value() * gv(i);
      }
      if (prob.l() > 0) {
        comp_ineq = (prob.p - prob.H * x - prob.K * gv).dot(dp.v);
      }
      const double deficit = pairing - ds.alpha.dot(x);
      const double err =
          std::abs(gap - (comp_gauge + comp_ineq + deficit)) /
          (1.0 + std::abs(gap));
      worst_identity = std::max(worst_identity, err);
      if (err > 1e-8) {
        return {false, "gap identity off by " + fmt(err)};
      }
    }
  }
  return {true, "25 certified pairs (max residual " + fmt(worst_resid) +
                    "), identity error <= " + fmt(worst_identity)};
}

// ---------------------------------------------------------------------------
// 7. Primal recovery on the criterion-2 instances: G(x*) = lambda to 1e-6,
//    certificate verdict true, |objective - oracle| <= 2e-3.
// ---------------------------------------------------------------------------
Outcome criterion_recovery() {
  if (g_solved.empty()) return {false, "criterion 2 did not run"};
  double worst_lambda = 0.0, worst_obj = 0.0;
  for (const SolvedInstance& si : g_solved) {
    const Problem& prob = si.gi.prob;
    DualKKTPoint kkt = extract_kkt(prob, *si.dual.dual);
    RecoveryResult rec = recover_primal(prob, kkt, 1e-6);
    if (!rec.report.verdict) return {false, "recovery certificate failed"};
    for (int i = 0; i < prob.m(); ++i) {
      worst_lambda = std::max(
          worst_lambda,
          std::abs(rec.x_star.gauge_values[i].value() - kkt.lambda(i)));
    }
    const double obj = primal_objective(prob, rec.x_star).value();
    worst_obj = std::max(worst_obj, std::abs(obj - si.oracle.objective));
  }
  if (worst_lambda > 1e-6) {
    return {false, "G(x*) vs lambda error " + fmt(worst_lambda) + " > 1e-6"};
  }
  if (worst_obj > 2e-3) {
    return {false, "objective vs oracle error " + fmt(worst_obj) + " > 2e-3"};
  }
  return {true, "25 recoveries, max G(x*)-lambda " + fmt(worst_lambda) +
                    ", max objective error " + fmt(worst_obj)};
}

// ---------------------------------------------------------------------------
// 8. Perspective identities: h^pi(x,1) = h(x) to 1e-12 on 1000 points;
//    positive homogeneity on 1000 triples; source and lifted optima agree to
//    1e-6 on 10 quadratic instances; weak duality holds on 1000 pairs.
// ---------------------------------------------------------------------------
Outcome criterion_perspective() {
  Rng rng(8008);

  // identity at zeta = 1
  {
    Matrix Q(2, 2);
    Q << 1.5, 0.2, 0.2, 0.9;
    ConvexSpec h = make_quadratic(Q, Vector::Ones(2), 0.3);
    for (int t = 0; t < 1000; ++t) {
      Vector x = rng.gaussian(2, 3.0);
      const double a = eval_perspective(h, x, 1.0).value();
      const double b = eval_convex(h, x).value();
      if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(b))) {
        return {false, "h^pi(x,1) != h(x): error " + fmt(std::abs(a - b))};
      }
    }
  }

  // positive homogeneity on (x, zeta, t) triples
  {
    Matrix Q(1, 1);
    Q << 1.0;
    ConvexSpec h = make_quadratic(Q, Vector::Zero(1), 0.2);
    for (int t = 0; t < 1000; ++t) {
      Vector x = rng.gaussian(1, 2.0);
      const double zeta = rng.uniform(0.0, 3.0);
      const double s = rng.uniform(1e-2, 10.0);
      ExtReal v = eval_perspective(h, x, zeta);
      ExtReal vs = eval_perspective(h, s * x, s * zeta);
      if (v.is_finite() != vs.is_finite()) {
        return {false, "homogeneity changed finiteness"};
      }
      if (v.is_finite() &&
          std::abs(vs.value() - s * v.value()) > 1e-9 * (1.0 + vs.value())) {
        return {false, "homogeneity error " +
                           fmt(std::abs(vs.value() - s * v.value()))};
      }
    }
  }

  // optimum equivalence on 10 oracle-solvable quadratic instances
  double worst_gap = 0.0;
  for (int inst = 0; inst < 10; ++inst) {
    ConvexProblem pf = testing::random_nonneg_quadratic_instance(rng);
    OracleOptions opts;
    opts.grid_points_per_dim = 81;
    opts.refine_levels = 6;
    SolveResult src = oracle_solve_convex(pf, opts);
    if (src.status != SolveStatus::ToleranceReached) {
      --inst;  // resample unbounded/infeasible draws
      continue;
    }
    PerspectiveProblem pp = build_perspective_problem(pf);
    SolveResult lifted = oracle_solve_primal(pp.lifted, opts);
    if (lifted.status != SolveStatus::ToleranceReached) {
      return {false, "lifted oracle failed"};
    }
    const double gap =
        std::abs((src.objective - pf.objective_offset) - lifted.objective);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 1e-6) {
      return {false, "opt(P_F) vs opt(P_pi) gap " + fmt(gap) + " > 1e-6"};
    }
  }

  // weak duality between the lifted primal and the perspective dual
  {
    ConvexProblem pf = testing::random_nonneg_quadratic_instance(rng);
    PerspectiveProblem pp = build_perspective_problem(pf);
    PerspectiveDual pd = build_perspective_dual(pp);
    OracleOptions opts;
    opts.refine_levels = 4;
    SolveResult primal = oracle_solve_primal(pp.lifted, opts);
    if (primal.status != SolveStatus::ToleranceReached) {
      return {false, "lifted primal oracle failed"};
    }
    const int k = static_cast<int>(pd.u_rows.size());
    const int m = static_cast<int>(pd.w_rows.size());
    int pairs = 0;
    int attempts = 0;
    while (pairs < 1000 && attempts < 40000) {
      ++attempts;
      Vector u = rng.gaussian(k, 1.0);
      Vector v = rng.gaussian(pp.lifted.l(), 0.7).cwiseAbs();
      Vector w = -rng.gaussian(m, 1.0).cwiseAbs();
      auto [u_hat, vv] = assemble_lifted_dual(pd, u, v, w);
      DualPoint dp{u_hat, vv};
      DualSlack ds = dual_slack(pp.lifted, dp);
      // demand a margin well above the numeric polar accuracy
      if (ds.min_slack() < 1e-4) continue;
      ++pairs;
      const double dual_obj = dual_objective(pp.lifted, dp);
      if (primal.objective < dual_obj - 1e-9) {
        return {false, "weak duality violated by " +
                           fmt(dual_obj - primal.objective)};
      }
    }
    if (pairs < 1000) {
      return {false, "only " + std::to_string(pairs) +
                         " feasible dual samples found"};
    }
  }
  return {true, "identities, 10 optimum matches (max gap " + fmt(worst_gap) +
                    "), 1000 weak-duality pairs"};
}

// ---------------------------------------------------------------------------
// 9. Double dual: |opt(P) - opt(P')| <= 2e-3 via the oracle on 10 convex
//    instances (the epigraph oracle grids (x, y) jointly).
// ---------------------------------------------------------------------------
Outcome criterion_double_dual() {
  Rng rng(9009);
  InstanceOptions opt;
  opt.max_n = 4;
  opt.max_m = 2;
  opt.max_free_dims = 2;
  double worst = 0.0;
  int done = 0;
  while (done < 10) {
    GaugeInstance gi = testing::random_convex_gauge_instance(rng, opt);
    SolveResult primal = oracle_solve_primal(gi.prob, {});
    if (primal.status != SolveStatus::ToleranceReached) continue;
    EpigraphProblem ep = build_double_dual(gi.prob);
    SolveResult lifted = oracle_solve_epigraph(ep, {});
    if (lifted.status != SolveStatus::ToleranceReached) {
      return {false, "epigraph oracle failed"};
    }
    const double gap = std::abs(primal.objective - lifted.objective);
    worst = std::max(worst, gap);
    if (gap > 2e-3) {
      return {false, "|opt(P) - opt(P')| = " + fmt(gap) + " > 2e-3"};
    }
    ++done;
  }
  return {true, "10 instances, max gap " + fmt(worst)};
}

// ---------------------------------------------------------------------------
// 10. Determinism: the full CLI pipeline, run twice with the same seed,
//     produces byte-identical reports.
// ---------------------------------------------------------------------------
Outcome criterion_determinism() {
  if (g_cli_path.empty()) return {false, "--cli-path not provided"};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gaugekit_acceptance";
  fs::create_directories(dir);

  Rng rng(1010);
  GaugeInstance gi = testing::random_convex_gauge_instance(rng);
  const fs::path prob = dir / "prob.json";
  write_json_file(prob.string(), problem_to_json(gi.prob));

  auto run_pipeline = [&](const std::string& tag) -> std::string {
    const fs::path dual = dir / ("dual_" + tag + ".json");
    const fs::path solve = dir / ("solve_" + tag + ".json");
    const fs::path cert = dir / ("cert_" + tag + ".json");
    std::string cmd = g_cli_path + " dualize " + prob.string() + " -o " +
                      dual.string() + " > /dev/null 2>&1 && " + g_cli_path +
                      " solve " + prob.string() +
                      " --method subgradient --seed 17 --iters 20000 -o " +
                      solve.string() + " > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) return "";
    // certify the recovered pair from the solve report
    Json rep = read_json_file(solve.string());
    if (!rep.contains("recovered_x")) return "";
    Json point;
    point["x"] = rep["recovered_x"];
    point["u"] = rep["u"];
    point["v"] = rep["v"];
    const fs::path pt = dir / ("pt_" + tag + ".json");
    write_json_file(pt.string(), point);
    std::string cmd2 = g_cli_path + " certify " + prob.string() + " " +
                       pt.string() + " -o " + cert.string() +
                       " > /dev/null 2>&1";
    if (std::system(cmd2.c_str()) != 0) return "";
    std::ostringstream all;
    for (const fs::path& f : {dual, solve, cert}) {
      std::ifstream in(f, std::ios::binary);
      all << in.rdbuf() << "\x1e";
    }
    return all.str();
  };

  const std::string first = run_pipeline("a");
  const std::string second = run_pipeline("b");
  if (first.empty() || second.empty()) {
    return {false, "pipeline run failed (see " + dir.string() + ")"};
  }
  if (first != second) return {false, "reports differ between runs"};
  return {true, "dualize + solve + certify reports byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli-path" && i + 1 < argc) {
      g_cli_path = argv[++i];
    }
  }

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"weak duality fuzzing (100 x 100 pairs)", criterion_weak_duality},
      {"strong duality (25 Slater instances)", criterion_strong_duality},
      {"polar involution (1000 pts/gauge)", criterion_involution},
      {"hoelder inequality (10000 pairs/family)", criterion_hoelder},
      {"lagrangian equivalence (witnesses + grid infima)", criterion_lagrangian},
      {"optimality-condition chain", criterion_conditions},
      {"primal recovery (25 instances)", criterion_recovery},
      {"perspective identities", criterion_perspective},
      {"double dual equivalence (10 instances)", criterion_double_dual},
      {"determinism (CLI pipeline, fixed seed)", criterion_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double sec = seconds_since(t0);
    std::printf("[%2zu/10] %-50s %s (%s; %.1f s)\n", i + 1, criteria[i].name,
                out.pass ? "PASS" : "FAIL", out.detail.c_str(), sec);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}
