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

#include "gaugekit/certify.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/errors.hpp"
#include "gaugekit/perspective.hpp"

namespace gaugekit {

namespace {

double abs_or_inf(ExtReal v) {
  if (!v.is_finite()) return std::numeric_limits<double>::infinity();
  return std::abs(v.value());
}

}  // namespace

OptimalityReport check_optimality(const Problem& prob, const PrimalPoint& pt,
                                  const DualPoint& dp, double tol) {
  OptimalityReport rep;
  rep.tol = tol;
  rep.primal_feas = primal_feasibility(prob, pt, tol);
  rep.cond_primal = rep.primal_feas.feasible;

  DualSlack ds = dual_slack(prob, dp);
  rep.dual_min_slack = ds.min_slack();
  rep.dual_v_min = prob.l() > 0 ? dp.v.minCoeff() : 0.0;
  rep.cond_dual = rep.dual_min_slack >= -tol && rep.dual_v_min >= -tol;
  rep.dual_feasible = rep.cond_dual;

  const int m = prob.m();
  rep.comp_gauge = Vector::Zero(m);
  for (int i = 0; i < m; ++i) {
    rep.comp_gauge(i) = abs_or_inf(
        complementarity_product(ds.slack[i], pt.gauge_values[i]));
  }
  rep.cond_comp_gauge = m == 0 || rep.comp_gauge.maxCoeff() <= tol;

  rep.comp_ineq = Vector::Zero(prob.l());
  if (prob.l() > 0) {
    if (!pt.in_domain()) {
      rep.comp_ineq.setConstant(std::numeric_limits<double>::infinity());
    } else {
      Vector gv(m);
      for (int i = 0; i < m; ++i) gv(i) = pt.gauge_values[i].value();
      Vector res = prob.p - prob.H * pt.x - prob.K * gv;
      for (int i = 0; i < prob.l(); ++i) rep.comp_ineq(i) = std::abs(res(i) * dp.v(i));
    }
  }
  rep.cond_comp_ineq = prob.l() == 0 || rep.comp_ineq.maxCoeff() <= tol;

  if (!pt.in_domain()) {
    rep.alignment_residual = std::numeric_limits<double>::infinity();
  } else {
    ExtReal pairing(0.0);
    for (int i = 0; i < m; ++i) {
      pairing += complementarity_product(ds.polar_values[i], pt.gauge_values[i]);
    }
    rep.alignment_residual =
        pairing.is_finite()
            ? std::abs(pairing.value() - ds.alpha.dot(pt.x))
            : std::numeric_limits<double>::infinity();
  }
  rep.cond_alignment = rep.alignment_residual <= tol;

  ExtReal gap = primal_objective(prob, pt) - ExtReal(dual_objective(prob, dp));
  rep.duality_gap = gap.value();

  rep.verdict = rep.cond_primal && rep.cond_dual && rep.cond_comp_gauge &&
                rep.cond_comp_ineq && rep.cond_alignment;
  return rep;
}

ExtReal lagrangian_value(const Problem& prob, const PrimalPoint& pt,
                         const DualPoint& dp) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "lagrangian: dual point dimensions");
  if (!pt.in_domain()) return ExtReal::infinity();
  Vector gv(prob.m());
  for (int i = 0; i < prob.m(); ++i) gv(i) = pt.gauge_values[i].value();
  double val = prob.c.dot(pt.x) + prob.d.dot(gv);
  if (prob.k() > 0)
    val += dp.u.dot(prob.b - prob.A * pt.x - prob.B * gv);
  if (prob.l() > 0)
    val += dp.v.dot(prob.H * pt.x + prob.K * gv - prob.p);
  return val;
}

ExtReal lagrangian_dual_value(const Problem& prob, const DualPoint& dp,
                              double feas_tol) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "dual value: dual point dimensions");
  if (prob.l() > 0 && dp.v.minCoeff() < 0.0) {
    fail(ErrorCode::NegativeMultiplier,
         "lagrangian_dual_value requires v >= 0");
  }
  DualSlack ds = dual_slack(prob, dp);
  if (!ds.slack_nonnegative(feas_tol)) return ExtReal::neg_infinity();
  return dual_objective(prob, dp);
}

namespace {

// Candidate directions inside one block used for the zero-polar case: pick a
// direction with positive gauge value and (after normalization) a positive
// descent slope.
std::vector<Vector> block_direction_candidates(const GaugeSpec& g) {
  const int n = g.dim();
  std::vector<Vector> cands;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    cands.push_back(e);
    cands.push_back(-e);
  }
  if (const auto* poly = std::get_if<PolyhedralGauge>(&g.fn)) {
    for (int r = 0; r < poly->generators.rows(); ++r) {
      Vector row = poly->generators.row(r).transpose();
      if (row.norm() > 0.0) cands.push_back(row / row.norm());
    }
  }
  cands.push_back(Vector::Ones(n) / std::sqrt(double(n)));
  return cands;
}

}  // namespace

UnboundednessWitness unboundedness_witness(const Problem& prob,
                                           const DualPoint& dp, double tol) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "witness: dual point dimensions");
  if (prob.l() > 0 && dp.v.minCoeff() < 0.0) {
    fail(ErrorCode::NegativeMultiplier, "witness requires v >= 0");
  }
  DualSlack ds = dual_slack(prob, dp);

  int j = -1;
  ExtReal worst = ExtReal::infinity();
  for (int i = 0; i < prob.m(); ++i) {
    if (ds.slack[i] < worst) {
      worst = ds.slack[i];
      j = i;
    }
  }
  if (j < 0 || !(worst < ExtReal(-tol))) {
    fail(ErrorCode::NotInfeasible,
         "dual point is feasible; no unbounded ray exists");
  }

  const GaugeSpec& gj = prob.gauge.specs[j];
  const Vector alpha_j = prob.gauge.gather(ds.alpha, j);
  const double beta_j = ds.beta(j);
  const ExtReal polar_j = ds.polar_values[j];

  UnboundednessWitness w;
  w.block = j;
  w.direction = Vector::Zero(prob.n());

  if (polar_j.is_pos_inf()) {
    w.kind = RayKind::InfinitePolar;
    Vector ray;
    if (const auto* cone = std::get_if<ConeIndicator>(&gj.fn)) {
      auto sup = detail::cone_support(*cone, alpha_j);
      require(sup.unbounded, ErrorCode::WitnessUnavailable,
              "cone support no longer unbounded");
      ray = sup.ray;
    } else if (const auto* poly = std::get_if<PolyhedralGauge>(&gj.fn)) {
      auto sup = detail::polyhedral_support(poly->generators, alpha_j);
      require(sup.unbounded, ErrorCode::WitnessUnavailable,
              "polyhedral support no longer unbounded");
      ray = sup.ray;
    } else if (const auto* pw = std::get_if<PerspectiveWrap>(&gj.fn)) {
      // ride the zeta axis when the underlying h vanishes somewhere
      ExtReal hmin = convex_min_value(*pw->h);
      require(hmin.is_finite() && std::abs(hmin.value()) <= kDefaultTol,
              ErrorCode::WitnessUnavailable,
              "no closed-form divergent sequence for this perspective block");
      ray = Vector::Zero(gj.dim());
      ray(gj.dim() - 1) = 1.0;
      require(alpha_j.dot(ray) > tol, ErrorCode::WitnessUnavailable,
              "perspective ray does not improve the Lagrangian");
    } else {
      fail(ErrorCode::WitnessUnavailable,
           "infinite polar on a finite-polar gauge family");
    }
    prob.gauge.scatter_add(w.direction, j, ray);
    w.slope = alpha_j.dot(ray) - beta_j * eval(gj, ray).value();
    require(w.slope > 0.0, ErrorCode::WitnessUnavailable,
            "ray slope not positive");
    return w;
  }

  if (polar_j.value() > tol) {
    w.kind = RayKind::FinitePolar;
    Vector x_bar;
    if (vanishes_only_at_origin(gj)) {
      x_bar = support_argmax(gj, alpha_j).x_bar;
    } else if (const auto* poly = std::get_if<PolyhedralGauge>(&gj.fn)) {
      auto sup = detail::polyhedral_support(poly->generators, alpha_j);
      x_bar = sup.argmax;
    } else {
      fail(ErrorCode::WitnessUnavailable,
           "no support maximizer available for the violating block");
    }
    const double gval = eval(gj, x_bar).value();
    require(gval > 0.0, ErrorCode::WitnessUnavailable,
            "support maximizer has zero gauge value");
    x_bar /= gval;  // normalize onto the unit sphere
    prob.gauge.scatter_add(w.direction, j, x_bar);
    w.slope = alpha_j.dot(x_bar) - beta_j;
    require(w.slope > 0.0, ErrorCode::WitnessUnavailable,
            "finite-polar ray slope not positive");
    return w;
  }

  // polar ~ 0 with beta_j < 0: a direction with positive gauge value drives
  // the Lagrangian down at rate at least -beta_j.
  w.kind = RayKind::ZeroPolar;
  if (std::holds_alternative<ConeIndicator>(gj.fn)) {
    fail(ErrorCode::WitnessUnavailable,
         "cone indicator vanishes on its domain; no descent direction");
  }
  for (const Vector& cand : block_direction_candidates(gj)) {
    ExtReal gval = eval(gj, cand);
    if (!gval.is_finite() || gval.value() <= tol) continue;
    Vector xhat = cand / gval.value();
    const double slope = alpha_j.dot(xhat) - beta_j;
    if (slope > tol) {
      prob.gauge.scatter_add(w.direction, j, xhat);
      w.slope = slope;
      return w;
    }
  }
  fail(ErrorCode::WitnessUnavailable,
       "no candidate direction with positive gauge value and positive slope");
}

}  // namespace gaugekit
