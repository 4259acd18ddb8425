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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaugekit/errors.hpp"
#include "gaugekit/gridscan.hpp"
#include "gaugekit/solve.hpp"
#include "support/instance_gen.hpp"

using namespace gaugekit;

namespace {

Problem one_var_instance() {
  Vector c = Vector::Zero(1), d = Vector::Ones(1), b = Vector::Ones(1), p(0);
  Matrix A(1, 1);
  A << 1.0;
  VectorGauge vg = make_vector_gauge(trivial_partition(1), {make_pnorm(1.0, 1)});
  return make_gauge_problem(c, d, b, p, A, Matrix(0, 1), Matrix(0, 1),
                            std::move(vg));
}

}  // namespace

TEST_CASE("grid scan: serial and parallel kernels agree") {
  GridSpec spec{Vector::Constant(3, -2.0), Vector::Constant(3, 2.0), 31};
  auto fn = [](const Vector& x) {
    if (x(0) + x(1) > 1.5) return std::numeric_limits<double>::infinity();
    return (x - Vector::Constant(3, 0.37)).squaredNorm();
  };
  GridBest serial = grid_scan_serial(spec, fn);
  GridBest parallel = grid_scan_parallel(spec, fn);
  REQUIRE(serial.found());
  CHECK(serial.index == parallel.index);
  CHECK(serial.value == parallel.value);
  CHECK(serial.evaluated == parallel.evaluated);
  CHECK(grid_size(spec) == 31LL * 31 * 31);
}

TEST_CASE("grid scan tie-break picks the lowest index") {
  GridSpec spec{Vector::Constant(1, -1.0), Vector::Constant(1, 1.0), 5};
  auto flat = [](const Vector&) { return 1.0; };
  CHECK(grid_scan_serial(spec, flat).index == 0);
  CHECK(grid_scan_parallel(spec, flat).index == 0);
}

TEST_CASE("oracle: one-variable instance and edge cases") {
  Problem prob = one_var_instance();
  SolveResult r = oracle_solve_primal(prob, {});
  REQUIRE(r.status == SolveStatus::ToleranceReached);
  CHECK(r.x(0) == doctest::Approx(1.0));
  CHECK(r.objective == doctest::Approx(1.0));

  // infeasible equalities
  Problem inf = prob;
  inf.A = Matrix(2, 1);
  inf.A << 1.0, -1.0;
  inf.b = Vector(2);
  inf.b << 0.0, 1.0;
  CHECK(oracle_solve_primal(inf, {}).status == SolveStatus::Infeasible);

  // unconstrained min |x| -> 0 at 0 (0 lies on the odd grid)
  Problem unc = prob;
  unc.A = Matrix(0, 1);
  unc.b = Vector(0);
  SolveResult r0 = oracle_solve_primal(unc, {});
  REQUIRE(r0.status == SolveStatus::ToleranceReached);
  CHECK(r0.objective == doctest::Approx(0.0));
  CHECK(r0.x(0) == doctest::Approx(0.0));
}

TEST_CASE("oracle rejects too many free dimensions") {
  Vector c = Vector::Ones(5), d = Vector::Ones(1);
  VectorGauge vg = make_vector_gauge(make_partition(5, {{0, 1, 2, 3, 4}}),
                                     {make_pnorm(2.0, 5)});
  Problem prob = make_gauge_problem(c, d, Vector(0), Vector(0), Matrix(0, 5),
                                    Matrix(0, 5), Matrix(0, 1), std::move(vg));
  CHECK_THROWS_AS(oracle_solve_primal(prob, {}), Error);
}

TEST_CASE("subgradient solver: one-variable instance converges") {
  Problem prob = one_var_instance();
  SubgradientOptions opts;
  opts.iters = 20000;
  SolveResult r = solve_dual_subgradient(prob, opts);
  REQUIRE(r.dual.has_value());
  CHECK(std::abs(r.objective - 1.0) <= 1e-4);
  CHECK(std::abs(r.dual->u(0) - 1.0) <= 1e-3);
}

TEST_CASE("subgradient solver: b = 0, p = 0 stays at the origin") {
  Problem prob = one_var_instance();
  prob.b(0) = 0.0;
  SolveResult r = solve_dual_subgradient(prob, {});
  CHECK(r.objective == doctest::Approx(0.0));
}

TEST_CASE("subgradient + polish approach the oracle value (strong duality)") {
  // two-block l2 x l1 instance
  Vector c(3), d(2), b(2), p(0);
  c << 0.1, -0.2, 0.05;
  d << 1.2, 0.8;
  b << 1.0, -0.5;
  Matrix A(2, 3);
  A << 1, 1, 0, 0, 1, 1;
  VectorGauge vg = make_vector_gauge(make_partition(3, {{0, 1}, {2}}),
                                     {make_pnorm(2.0, 2), make_pnorm(1.0, 1)});
  Problem prob = make_gauge_problem(c, d, b, p, A, Matrix(0, 3), Matrix(0, 2),
                                    std::move(vg));

  SolveResult oracle = oracle_solve_primal(prob, {});
  REQUIRE(oracle.status == SolveStatus::ToleranceReached);

  SubgradientOptions sopts;
  sopts.iters = 60000;
  SolveResult sg = solve_dual_subgradient(prob, sopts);
  REQUIRE(sg.dual.has_value());
  CHECK(oracle.objective >= sg.objective - 1e-3);
  CHECK(std::abs(oracle.objective - sg.objective) <= 1e-3 + oracle.accuracy);

  SolveResult pol = polish_dual(prob, *sg.dual, {});
  REQUIRE(pol.dual.has_value());
  CHECK(dual_feasible(prob, *pol.dual, 1e-8));
  CHECK(pol.objective >= sg.objective - 1e-9);
  CHECK(std::abs(oracle.objective - pol.objective) <= 2e-3);
}

TEST_CASE("polish handles cone blocks through exact linear rows") {
  // min c^T x s.t. A x = b, x in orthant: the dual is an LP
  Vector c(2), d = Vector::Zero(1), b(1), p(0);
  c << 1.0, 2.0;
  b << 1.0;
  Matrix A(1, 2);
  A << 1.0, 1.0;
  VectorGauge vg = make_vector_gauge(make_partition(2, {{0, 1}}),
                                     {make_orthant_indicator(2)});
  Problem prob = make_gauge_problem(c, d, b, p, A, Matrix(0, 2), Matrix(0, 1),
                                    std::move(vg));
  SolveResult pol = polish_dual(prob, {Vector::Zero(1), Vector(0)}, {});
  REQUIRE(pol.dual.has_value());
  // LP dual: max u s.t. u <= 1, u <= 2
  CHECK(pol.objective == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("extract_kkt produces small residuals at a polished point") {
  Rng rng(613);
  int done = 0;
  while (done < 6) {
    auto gi = testing::random_convex_gauge_instance(rng);
    SolveResult sg = solve_dual_subgradient(gi.prob, {});
    SolveResult pol = polish_dual(gi.prob, *sg.dual, {});
    REQUIRE(pol.dual.has_value());
    DualKKTPoint kkt = extract_kkt(gi.prob, *pol.dual);
    KKTResidual res = kkt_residual(gi.prob, kkt);
    CHECK(res.max_residual() <= 1e-6);
    ++done;
  }
}

TEST_CASE("solve_lp wrapper statuses") {
  Vector c(2);
  c << -1.0, -1.0;
  Matrix A_ub(4, 2);
  A_ub << 1, 0, 0, 1, -1, 0, 0, -1;
  Vector b_ub(4);
  b_ub << 1, 1, 0, 0;
  SolveResult r = solve_lp(c, Matrix(0, 2), Vector(0), A_ub, b_ub);
  REQUIRE(r.status == SolveStatus::ToleranceReached);
  CHECK(r.objective == doctest::Approx(-2.0));
  REQUIRE(r.dual.has_value());
  const double dual_obj = r.dual->v.dot(b_ub);
  CHECK(dual_obj == doctest::Approx(r.objective).epsilon(1e-8));

  Matrix A_eq(2, 1);
  A_eq << 1, -1;
  Vector b_eq(2);
  b_eq << 0, 1;
  CHECK(solve_lp(Vector::Zero(1), A_eq, b_eq, Matrix(0, 1), Vector(0)).status ==
        SolveStatus::Infeasible);
}

TEST_CASE("oracle/dual sandwich on random instances") {
  Rng rng(617);
  int done = 0;
  while (done < 5) {
    auto gi = testing::random_convex_gauge_instance(rng);
    auto slater = find_slater_point(gi.prob);
    REQUIRE(slater.has_value());
    SolveResult oracle = oracle_solve_primal(gi.prob, {});
    REQUIRE(oracle.status == SolveStatus::ToleranceReached);
    SolveResult sg = solve_dual_subgradient(gi.prob, {});
    SolveResult pol = polish_dual(gi.prob, *sg.dual, {});
    CHECK(oracle.objective >= pol.objective - 1e-3);
    CHECK(std::abs(oracle.objective - pol.objective) <= 2e-3);
    ++done;
  }
}

TEST_CASE("find_slater_point respects strictness") {
  Problem prob = one_var_instance();
  auto pt = find_slater_point(prob);
  REQUIRE(pt.has_value());
  CHECK((*pt)(0) == doctest::Approx(1.0));  // unique feasible point
}

TEST_CASE("a too-small penalty is reported, not hidden") {
  Problem prob = one_var_instance();
  SubgradientOptions opts;
  opts.rho = 1e-4;  // far below the automatic safeguard
  opts.step = 2.0;
  opts.iters = 300;
  opts.restarts = 1;
  try {
    solve_dual_subgradient(prob, opts);
    FAIL("expected PenaltyTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PenaltyTooSmall);
  }
}

TEST_CASE("solve_lp rejects oversized instances") {
  Vector c = Vector::Zero(51);
  CHECK_THROWS_AS(solve_lp(c, Matrix(0, 51), Vector(0), Matrix(0, 51), Vector(0)),
                  Error);
}
