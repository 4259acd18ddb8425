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

#include <vector>

#include "gaugekit/model.hpp"

namespace gaugekit {

struct DualPoint {
  Vector u;  // equality multipliers, R^k
  Vector v;  // inequality multipliers, R^l
};

/// Dual constraint data at (u, v):
///   alpha = A^T u - H^T v - c,
///   beta  = d - B^T u + K^T v,
///   slack = beta - G°(alpha)   (blockwise).
/// Dual feasibility is slack >= 0 with v >= 0. The sign convention is chosen
/// so "slack >= 0" is exactly the dual constraint
///   G°(A^T u - H^T v - c) + B^T u - K^T v <= d.
struct DualSlack {
  Vector alpha;
  Vector beta;
  std::vector<ExtReal> polar_values;
  std::vector<ExtReal> slack;

  double min_slack() const;
  bool slack_nonnegative(double tol) const;
};

/// b^T u - p^T v.
double dual_objective(const Problem& prob, const DualPoint& dp);

DualSlack dual_slack(const Problem& prob, const DualPoint& dp);

/// slack >= -tol componentwise and v >= -tol.
bool dual_feasible(const Problem& prob, const DualPoint& dp,
                   double tol = kDefaultTol);

/// Dual of the dual: the epigraph lift
///     min c^T x + d^T y  s.t.  A x + B y = b, H x + K y <= p, G(x) <= y,
/// carried natively over (x, y) (no polar-of-polar evaluation).
struct EpigraphProblem {
  Problem source;

  int x_dim() const { return source.n(); }
  int y_dim() const { return source.m(); }
};

EpigraphProblem build_double_dual(const Problem& prob);

ExtReal epigraph_objective(const EpigraphProblem& ep, const Vector& x,
                           const Vector& y);
FeasReport epigraph_feasibility(const EpigraphProblem& ep, const Vector& x,
                                const Vector& y, double tol = kFeasTol);

}  // namespace gaugekit
