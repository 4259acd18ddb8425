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
#include "gaugekit/recover.hpp"
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

TEST_CASE("phi values: frozen examples") {
  Problem prob = one_var_instance();
  auto phi = phi_value(prob, {vec1(1.0), Vector(0)});
  CHECK(phi[0].value() == doctest::Approx(1.0));

  Problem zero_c = prob;
  zero_c.c(0) = 0.0;
  auto phi0 = phi_value(zero_c, {vec1(0.0), Vector(0)});
  CHECK(phi0[0].value() == 0.0);

  // two-block l2 instance with alpha blocks (3,4) and (0,0)
  Vector c = Vector::Zero(4), d = Vector::Ones(2), b(4), p(0);
  Matrix A = Matrix::Identity(4, 4);
  b << 3, 4, 0, 0;
  VectorGauge vg = make_vector_gauge(make_partition(4, {{0, 1}, {2, 3}}),
                                     {make_pnorm(2.0, 2), make_pnorm(2.0, 2)});
  Problem two = make_gauge_problem(c, d, b, p, A, Matrix(0, 4), Matrix(0, 2),
                                   std::move(vg));
  auto phi2 = phi_value(two, {b, Vector(0)});  // u = (3,4,0,0)
  CHECK(phi2[0].value() == doctest::Approx(5.0));
  CHECK(phi2[1].value() == doctest::Approx(0.0));
}

TEST_CASE("phi subgradients: frozen examples") {
  Problem prob = one_var_instance();
  PhiSubgradients sg = phi_subgradients(prob, {vec1(1.0), Vector(0)});
  CHECK(sg.U(0, 0) == doctest::Approx(1.0));
  CHECK(sg.V.cols() == 0);

  // alpha block = 0 selects the origin
  PhiSubgradients sg0 = phi_subgradients(prob, {vec1(0.0), Vector(0)});
  CHECK(sg0.U(0, 0) == 0.0);

  // l2 block with A = I: U row is the unit support direction
  Vector c = Vector::Zero(2), d = Vector::Ones(1), b(2), p(0);
  Matrix A = Matrix::Identity(2, 2);
  b << 3, 4;
  VectorGauge vg = make_vector_gauge(make_partition(2, {{0, 1}}),
                                     {make_pnorm(2.0, 2)});
  Problem l2 = make_gauge_problem(c, d, b, p, A, Matrix(0, 2), Matrix(0, 1),
                                  std::move(vg));
  PhiSubgradients sgl2 = phi_subgradients(l2, {b, Vector(0)});
  CHECK(sgl2.U(0, 0) == doctest::Approx(0.6));
  CHECK(sgl2.U(0, 1) == doctest::Approx(0.8));
}

TEST_CASE("kkt residual: frozen examples") {
  Problem prob = one_var_instance();
  DualKKTPoint kkt{vec1(1.0), Vector(0), vec1(1.0), Vector(0), std::nullopt};
  KKTResidual res = kkt_residual(prob, kkt);
  CHECK(res.stationarity_u == doctest::Approx(0.0));
  CHECK(res.comp_constraint == doctest::Approx(0.0));

  DualKKTPoint wrong{vec1(1.0), Vector(0), vec1(2.0), Vector(0), std::nullopt};
  CHECK(kkt_residual(prob, wrong).stationarity_u == doctest::Approx(1.0));

  Problem zero_b = prob;
  zero_b.b(0) = 0.0;
  DualKKTPoint lam0{vec1(0.0), Vector(0), vec1(0.0), Vector(0), std::nullopt};
  CHECK(kkt_residual(zero_b, lam0).stationarity_u == doctest::Approx(0.0));
}

TEST_CASE("recover_primal: one-variable instance") {
  Problem prob = one_var_instance();
  DualKKTPoint kkt{vec1(1.0), Vector(0), vec1(1.0), Vector(0), std::nullopt};
  RecoveryResult rec = recover_primal(prob, kkt);
  CHECK(rec.x_star.x(0) == doctest::Approx(1.0));
  CHECK(rec.report.verdict);
  CHECK(rec.report.duality_gap == doctest::Approx(0.0));
}

TEST_CASE("recover_primal: lambda = 0 on a b = 0 instance") {
  Problem prob = one_var_instance();
  prob.b(0) = 0.0;
  DualKKTPoint kkt{vec1(0.2), Vector(0), vec1(0.0), Vector(0), std::nullopt};
  RecoveryResult rec = recover_primal(prob, kkt);
  CHECK(rec.x_star.x.norm() == 0.0);
  CHECK(rec.report.verdict);
}

TEST_CASE("recover_primal rejects bad inputs") {
  Problem prob = one_var_instance();
  // residual too large
  DualKKTPoint bad{vec1(1.0), Vector(0), vec1(3.0), Vector(0), std::nullopt};
  CHECK_THROWS_AS(recover_primal(prob, bad), Error);

  // cone blocks violate the definiteness requirement
  Vector c = Vector::Zero(2), d = Vector::Zero(1), b = Vector::Ones(2), p(0);
  Matrix A = Matrix::Identity(2, 2);
  VectorGauge vg = make_vector_gauge(make_partition(2, {{0, 1}}),
                                     {make_orthant_indicator(2)});
  Problem cone = make_gauge_problem(c, d, b, p, A, Matrix(0, 2), Matrix(0, 1),
                                    std::move(vg));
  DualKKTPoint ck{Vector::Zero(2), Vector(0), vec1(0.0), Vector(0), std::nullopt};
  CHECK_THROWS_AS(recover_primal(cone, ck), Error);
}

TEST_CASE("user-supplied support vectors take precedence after validation") {
  Problem prob = one_var_instance();
  std::vector<Vector> bars = {vec1(1.0)};
  DualKKTPoint kkt{vec1(1.0), Vector(0), vec1(1.0), Vector(0), bars};
  RecoveryResult rec = recover_primal(prob, kkt);
  CHECK(rec.x_star.x(0) == doctest::Approx(1.0));

  std::vector<Vector> off_ball = {vec1(2.0)};
  DualKKTPoint badbars{vec1(1.0), Vector(0), vec1(1.0), Vector(0), off_ball};
  CHECK_THROWS_AS(recover_primal(prob, badbars), Error);
}

TEST_CASE("subgradient inequality for the selected rows") {
  Rng rng(401);
  for (int inst = 0; inst < 8; ++inst) {
    auto gi = testing::random_convex_gauge_instance(rng);
    DualPoint dp = testing::sample_feasible_dual(gi.prob, rng, 1.0);
    PhiSubgradients sg = phi_subgradients(gi.prob, dp);
    auto phi = phi_value(gi.prob, dp);
    for (int t = 0; t < 20; ++t) {
      Vector du = rng.gaussian(gi.prob.k(), 0.3);
      Vector dv = rng.gaussian(gi.prob.l(), 0.3);
      DualPoint moved{dp.u + du, dp.v + dv};
      auto phi_moved = phi_value(gi.prob, moved);
      for (int i = 0; i < gi.prob.m(); ++i) {
        REQUIRE(phi[i].is_finite());
        REQUIRE(phi_moved[i].is_finite());
        double lin = phi[i].value();
        if (gi.prob.k() > 0) lin += sg.U.row(i).dot(du);
        if (gi.prob.l() > 0) lin += sg.V.row(i).dot(dv);
        CHECK(phi_moved[i].value() >= lin - 1e-9);
      }
    }
  }
}

TEST_CASE("recovery from exact KKT data on a two-block instance") {
  // min ||x12||_2 + |x3| s.t. coupled equalities; dual solved by polishing,
  // multipliers extracted, then recovery must certify
  Vector c = Vector::Zero(3), d = Vector::Ones(2), b(2), p(0);
  Matrix A(2, 3);
  A << 1, 1, 0, 0, 1, 1;
  b << 1.0, 2.0;
  VectorGauge vg = make_vector_gauge(make_partition(3, {{0, 1}, {2}}),
                                     {make_pnorm(2.0, 2), make_pnorm(1.0, 1)});
  Problem prob = make_gauge_problem(c, d, b, p, A, Matrix(0, 3), Matrix(0, 2),
                                    std::move(vg));

  SolveResult sg = solve_dual_subgradient(prob, {});
  REQUIRE(sg.dual.has_value());
  SolveResult pol = polish_dual(prob, *sg.dual, {});
  REQUIRE(pol.dual.has_value());
  DualKKTPoint kkt = extract_kkt(prob, *pol.dual);
  RecoveryResult rec = recover_primal(prob, kkt, 1e-6);
  CHECK(rec.report.verdict);
  for (int i = 0; i < prob.m(); ++i) {
    CHECK(rec.x_star.gauge_values[i].value() ==
          doctest::Approx(kkt.lambda(i)).epsilon(1e-6));
  }
  // cross-check against the exhaustive oracle
  SolveResult oracle = oracle_solve_primal(prob, {});
  REQUIRE(oracle.status == SolveStatus::ToleranceReached);
  const double recovered_obj =
      primal_objective(prob, rec.x_star).value();
  CHECK(std::abs(recovered_obj - oracle.objective) <= 2e-3);
}

TEST_CASE("sphere condition violations surface instead of renormalizing") {
  // small phi makes the maximizer check looser than the sphere check, so a
  // support vector just inside the ball passes validation but fails the
  // sphere hypothesis
  Vector c = Vector::Zero(1), d(1), b(1), p(0);
  d << 0.1;
  b << 0.1;
  Matrix A(1, 1);
  A << 0.1;
  VectorGauge vg = make_vector_gauge(trivial_partition(1), {make_pnorm(1.0, 1)});
  Problem prob = make_gauge_problem(c, d, b, p, A, Matrix(0, 1), Matrix(0, 1),
                                    std::move(vg));
  std::vector<Vector> bars = {vec1(1.0 - 5e-6)};
  DualKKTPoint kkt{vec1(1.0), Vector(0), vec1(1.0), Vector(0), bars};
  try {
    recover_primal(prob, kkt, 1e-6);
    FAIL("expected SphereConditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SphereConditionViolated);
  }
}
