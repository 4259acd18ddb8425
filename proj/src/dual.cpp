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

#include "gaugekit/dual.hpp"

#include <algorithm>

#include "gaugekit/errors.hpp"

namespace gaugekit {

double DualSlack::min_slack() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& s : slack) lo = std::min(lo, s.value());
  return lo;
}

bool DualSlack::slack_nonnegative(double tol) const {
  return min_slack() >= -tol;
}

double dual_objective(const Problem& prob, const DualPoint& dp) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "dual point dimensions");
  return prob.b.dot(dp.u) - prob.p.dot(dp.v);
}

DualSlack dual_slack(const Problem& prob, const DualPoint& dp) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "dual point dimensions");
  DualSlack ds;
  ds.alpha = prob.A.transpose() * dp.u - prob.H.transpose() * dp.v - prob.c;
  ds.beta = prob.d - prob.B.transpose() * dp.u + prob.K.transpose() * dp.v;
  ds.polar_values.reserve(prob.m());
  ds.slack.reserve(prob.m());
  for (int i = 0; i < prob.m(); ++i) {
    ExtReal pol = eval_polar(prob.gauge.specs[i], prob.gauge.gather(ds.alpha, i));
    ds.polar_values.push_back(pol);
    ds.slack.push_back(pol.is_finite() ? ExtReal(ds.beta(i) - pol.value())
                                       : ExtReal::neg_infinity());
  }
  return ds;
}

bool dual_feasible(const Problem& prob, const DualPoint& dp, double tol) {
  if (prob.l() > 0 && dp.v.minCoeff() < -tol) return false;
  return dual_slack(prob, dp).slack_nonnegative(tol);
}

EpigraphProblem build_double_dual(const Problem& prob) {
  // The double dual of the closed, convex catalogue gauges reproduces the
  // gauges themselves, so the lift keeps the original data and couples the
  // epigraph variables y >= G(x) natively.
  return EpigraphProblem{prob};
}

ExtReal epigraph_objective(const EpigraphProblem& ep, const Vector& x,
                           const Vector& y) {
  require(x.size() == ep.x_dim() && y.size() == ep.y_dim(),
          ErrorCode::DimensionMismatch, "epigraph point dimensions");
  return ep.source.c.dot(x) + ep.source.d.dot(y);
}

FeasReport epigraph_feasibility(const EpigraphProblem& ep, const Vector& x,
                                const Vector& y, double tol) {
  const Problem& src = ep.source;
  require(x.size() == src.n() && y.size() == src.m(),
          ErrorCode::DimensionMismatch, "epigraph point dimensions");
  FeasReport rep;
  std::vector<ExtReal> gv = src.gauge.eval_blocks(x);
  double coupling = 0.0;  // violation of G(x) <= y
  for (int i = 0; i < src.m(); ++i) {
    if (!gv[i].is_finite()) {
      rep.in_domain = false;
      break;
    }
    coupling = std::max(coupling, gv[i].value() - y(i));
  }
  if (!rep.in_domain) {
    rep.eq_residual = std::numeric_limits<double>::infinity();
    rep.ineq_violation = std::numeric_limits<double>::infinity();
    return rep;
  }
  if (src.k() > 0) rep.eq_residual = inf_norm(src.A * x + src.B * y - src.b);
  rep.ineq_violation = coupling;
  if (src.l() > 0) {
    Vector slack = src.H * x + src.K * y - src.p;
    rep.ineq_violation = std::max(rep.ineq_violation, std::max(0.0, slack.maxCoeff()));
  }
  rep.ineq_violation = std::max(0.0, rep.ineq_violation);
  rep.feasible = rep.eq_residual <= tol && rep.ineq_violation <= tol;
  return rep;
}

}  // namespace gaugekit
