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

#pragma once

#include "gaugekit/dual.hpp"
#include "gaugekit/model.hpp"

namespace gaugekit {

/// Default absolute tolerance on certificate residuals.
constexpr double kCertTol = 1e-6;

/// Residuals of the five optimality conditions for a primal/dual pair:
/// (1) primal feasibility, (2) dual feasibility, (3) gauge complementarity
/// [d + K^T v - G°(alpha)]_i g_i(x_{I_i}) = 0 (with B^T u folded into the
/// slack for problems carrying B), (4) inequality complementarity
/// [p - Hx - K G(x)]_i v_i = 0 over the l inequality rows, and
/// (5) alignment G°(alpha)^T G(x) = alpha^T x.
///
/// An infinite polar value paired with a nonzero gauge value reports as an
/// infinite residual (a failed condition), never as an exception.
struct OptimalityReport {
  FeasReport primal_feas;
  bool dual_feasible = false;
  double dual_min_slack = 0.0;
  double dual_v_min = 0.0;
  Vector comp_gauge;
  Vector comp_ineq;
  double alignment_residual = 0.0;
  double duality_gap = 0.0;
  bool cond_primal = false;
  bool cond_dual = false;
  bool cond_comp_gauge = false;
  bool cond_comp_ineq = false;
  bool cond_alignment = false;
  bool verdict = false;
  double tol = kCertTol;
};

OptimalityReport check_optimality(const Problem& prob, const PrimalPoint& pt,
                                  const DualPoint& dp, double tol = kCertTol);

/// L(x, u, v) = c^T x + d^T G(x) + u^T (b - Ax - B G(x))
///            + v^T (Hx + K G(x) - p);
/// +inf when x is outside dom G. With alpha, beta as in DualSlack this is
/// -alpha^T x + beta^T G(x) + b^T u - p^T v, so inf_x L recovers the dual
/// objective exactly on the dual-feasible set.
ExtReal lagrangian_value(const Problem& prob, const PrimalPoint& pt,
                         const DualPoint& dp);

/// Closed form of omega(u, v) = inf_x L(x, u, v): the dual objective
/// b^T u - p^T v when (u, v) is dual feasible, -inf otherwise.
ExtReal lagrangian_dual_value(const Problem& prob, const DualPoint& dp,
                              double feas_tol = kDefaultTol);

enum class RayKind { FinitePolar, InfinitePolar, ZeroPolar };

/// A ray x(t) = t * direction along which the Lagrangian decreases without
/// bound for a dual-infeasible (u, v). `slope` is the coefficient of -t:
/// L(x(t), u, v) = -slope * t + const with slope > 0. For InfinitePolar the
/// same ray doubles as the divergent sequence x^k = point_at(2^k).
struct UnboundednessWitness {
  int block = -1;
  RayKind kind = RayKind::FinitePolar;
  Vector direction;  // full-length, supported on the violating block
  double slope = 0.0;

  Vector point_at(double t) const { return t * direction; }
};

UnboundednessWitness unboundedness_witness(const Problem& prob,
                                           const DualPoint& dp,
                                           double tol = kDefaultTol);

}  // namespace gaugekit
