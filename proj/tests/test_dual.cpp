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

#include "gaugekit/dual.hpp"
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

Vector vec1(double x) {
  Vector v(1);
  v << x;
  return v;
}

}  // namespace

TEST_CASE("dual objective: frozen examples") {
  Problem prob = one_var_instance();
  CHECK(dual_objective(prob, {vec1(0.5), Vector(0)}) == doctest::Approx(0.5));
  CHECK(dual_objective(prob, {vec1(0.0), Vector(0)}) == 0.0);

  // b = (1,1), p = (2), u = (1,0), v = (0.5) -> 0
  Vector c = Vector::Zero(2), d = Vector::Ones(1), b = Vector::Ones(2),
         p = 2.0 * Vector::Ones(1);
  Matrix A(2, 2), H(1, 2), K(1, 1);
  A << 1, 0, 0, 1;
  H << 0, 0;
  K << 0;
  VectorGauge vg = make_vector_gauge(make_partition(2, {{0, 1}}),
                                     {make_pnorm(2.0, 2)});
  Problem two = make_gauge_problem(c, d, b, p, A, H, K, std::move(vg));
  Vector u(2);
  u << 1.0, 0.0;
  CHECK(dual_objective(two, {u, 0.5 * Vector::Ones(1)}) == doctest::Approx(0.0));
}

TEST_CASE("dual slack: frozen examples") {
  Problem prob = one_var_instance();

  DualSlack at1 = dual_slack(prob, {vec1(1.0), Vector(0)});
  CHECK(at1.alpha(0) == doctest::Approx(1.0));
  CHECK(at1.polar_values[0].value() == doctest::Approx(1.0));
  CHECK(at1.slack[0].value() == doctest::Approx(0.0));
  CHECK(dual_feasible(prob, {vec1(1.0), Vector(0)}));

  DualSlack at2 = dual_slack(prob, {vec1(2.0), Vector(0)});
  CHECK(at2.slack[0].value() == doctest::Approx(-1.0));
  CHECK_FALSE(dual_feasible(prob, {vec1(2.0), Vector(0)}));

  DualSlack at0 = dual_slack(prob, {vec1(0.0), Vector(0)});
  CHECK(at0.slack[0].value() == doctest::Approx(1.0));
}

TEST_CASE("weak duality on random instances") {
  Rng rng(211);
  for (int inst = 0; inst < 25; ++inst) {
    auto gi = testing::random_convex_gauge_instance(rng);
    for (int t = 0; t < 40; ++t) {
      Vector x = testing::sample_feasible_primal(gi.prob, gi.slater, rng, 2.0);
      DualPoint dp = testing::sample_feasible_dual(gi.prob, rng, 2.0);
      const double primal =
          primal_objective(gi.prob, make_primal_point(gi.prob, x)).value();
      const double dual = dual_objective(gi.prob, dp);
      CHECK(primal >= dual - 1e-9);
    }
  }
}

TEST_CASE("slack concavity along dual segments") {
  Rng rng(223);
  for (int inst = 0; inst < 10; ++inst) {
    auto gi = testing::random_convex_gauge_instance(rng);
    for (int t = 0; t < 30; ++t) {
      DualPoint a{rng.gaussian(gi.prob.k()), rng.gaussian(gi.prob.l()).cwiseAbs()};
      DualPoint b{rng.gaussian(gi.prob.k()), rng.gaussian(gi.prob.l()).cwiseAbs()};
      DualPoint mid{0.5 * (a.u + b.u), 0.5 * (a.v + b.v)};
      DualSlack sa = dual_slack(gi.prob, a);
      DualSlack sb = dual_slack(gi.prob, b);
      DualSlack sm = dual_slack(gi.prob, mid);
      for (int i = 0; i < gi.prob.m(); ++i) {
        if (!sa.slack[i].is_finite() || !sb.slack[i].is_finite()) continue;
        REQUIRE(sm.slack[i].is_finite());
        CHECK(sm.slack[i].value() >=
              0.5 * (sa.slack[i].value() + sb.slack[i].value()) - 1e-9);
      }
    }
  }
}

TEST_CASE("double dual: one-variable epigraph example") {
  Problem prob = one_var_instance();
  EpigraphProblem ep = build_double_dual(prob);
  // min y s.t. x = 1, |x| <= y: optimum 1 at (1, 1)
  CHECK(epigraph_objective(ep, vec1(1.0), vec1(1.0)).value() == doctest::Approx(1.0));
  CHECK(epigraph_feasibility(ep, vec1(1.0), vec1(1.0)).feasible);
  CHECK_FALSE(epigraph_feasibility(ep, vec1(1.0), vec1(0.5)).feasible);

  SolveResult r = oracle_solve_epigraph(ep, {});
  REQUIRE(r.status == SolveStatus::ToleranceReached);
  CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("an optimal primal point lifts to an equal-value epigraph point") {
  Rng rng(227);
  for (int inst = 0; inst < 8; ++inst) {
    auto gi = testing::random_convex_gauge_instance(rng);
    EpigraphProblem ep = build_double_dual(gi.prob);
    Vector x = testing::sample_feasible_primal(gi.prob, gi.slater, rng, 1.0);
    PrimalPoint pt = make_primal_point(gi.prob, x);
    Vector y(gi.prob.m());
    for (int i = 0; i < gi.prob.m(); ++i) y(i) = pt.gauge_values[i].value();
    CHECK(epigraph_feasibility(ep, x, y).feasible);
    CHECK(epigraph_objective(ep, x, y).value() ==
          doctest::Approx(primal_objective(gi.prob, pt).value()));
  }
}

TEST_CASE("double-dual optimum matches the primal optimum (oracle route)") {
  Rng rng(229);
  int done = 0;
  while (done < 5) {
    testing::InstanceOptions opt;
    opt.max_n = 4;
    opt.max_m = 2;
    opt.max_free_dims = 2;
    auto gi = testing::random_convex_gauge_instance(rng, opt);
    SolveResult primal = oracle_solve_primal(gi.prob, {});
    EpigraphProblem ep = build_double_dual(gi.prob);
    SolveResult lifted = oracle_solve_epigraph(ep, {});
    REQUIRE(primal.status == SolveStatus::ToleranceReached);
    REQUIRE(lifted.status == SolveStatus::ToleranceReached);
    CHECK(std::abs(primal.objective - lifted.objective) <= 2e-3);
    ++done;
  }
}

TEST_CASE("double dual with d = 0, K = 0 matches the primal optimum") {
  // min c'x s.t. Ax = b, |x| <= y with y unpriced
  Vector c(2), d = Vector::Zero(1), b(1), p(0);
  c << 1.0, 0.5;
  b << 1.0;
  Matrix A(1, 2);
  A << 1.0, -1.0;
  VectorGauge vg = make_vector_gauge(make_partition(2, {{0, 1}}),
                                     {make_pnorm(2.0, 2)});
  Problem prob = make_gauge_problem(c, d, b, p, A, Matrix(0, 2), Matrix(0, 1),
                                    std::move(vg));
  SolveResult primal = oracle_solve_primal(prob, {});
  SolveResult lifted = oracle_solve_epigraph(build_double_dual(prob), {});
  REQUIRE(primal.status == SolveStatus::ToleranceReached);
  REQUIRE(lifted.status == SolveStatus::ToleranceReached);
  CHECK(std::abs(primal.objective - lifted.objective) <= 2e-3);
}
