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

#include "gaugekit/linalg.hpp"

namespace gaugekit {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

struct LpResult {
  LpStatus status = LpStatus::IterLimit;
  Vector x;        // solution in the original (free) variables
  double objective = 0.0;
  Vector ray;      // improving feasible direction when Unbounded
  Vector dual_eq;  // row multipliers: objective == b_eq.dot(dual_eq) + b_ub.dot(dual_ub)
  Vector dual_ub;
  int iterations = 0;
};

/// Dense two-phase primal simplex for
///     minimize c^T x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x free.
/// Bland's rule throughout, so the pivot sequence (and the answer picked
/// among ties) is deterministic. Intended for small instances.
LpResult lp_solve(const Vector& c, const Matrix& A_eq, const Vector& b_eq,
                  const Matrix& A_ub, const Vector& b_ub, int max_iter = 0);

}  // namespace gaugekit
