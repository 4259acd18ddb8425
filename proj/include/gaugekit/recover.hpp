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

#include <optional>
#include <vector>

#include "gaugekit/certify.hpp"
#include "gaugekit/dual.hpp"
#include "gaugekit/model.hpp"

namespace gaugekit {

/// Default tolerance for recovery-side checks.
constexpr double kRecoverTol = 1e-6;

/// A KKT point of the dual problem: multipliers (u, v) with lambda >= 0 on
/// the dual gauge constraints and mu >= 0 on the sign constraints v >= 0,
/// optionally with one support vector per block realizing the subdifferential
/// rows U_i = (A_i x_bar_i)^T, V_i = -(H_i x_bar_i)^T.
struct DualKKTPoint {
  Vector u;
  Vector v;
  Vector lambda;
  Vector mu;
  std::optional<std::vector<Vector>> x_bar_blocks;
};

/// Residuals of the dual KKT system:
///   stationarity_v   = || p + V^T lambda - K lambda - mu ||_inf
///   stationarity_u   = || -b + U^T lambda ||_inf
///   comp_constraint  = | lambda^T (d - Phi(u,v) - K^T v) |
///   comp_sign        = | v^T mu |
/// plus sign and dual-feasibility residuals.
struct KKTResidual {
  double stationarity_v = 0.0;
  double stationarity_u = 0.0;
  double comp_constraint = 0.0;
  double comp_sign = 0.0;
  double dual_infeasibility = 0.0;  // max(0, -min slack), inf for infinite polars
  double sign_violation = 0.0;      // most negative of (lambda, mu, v), clamped at 0

  double max_residual() const;
};

/// Phi(u, v) = G°(A^T u - H^T v - c) blockwise.
std::vector<ExtReal> phi_value(const Problem& prob, const DualPoint& dp);

struct PhiSubgradients {
  Matrix U;  // m x k, row i = (A_i x_bar_i)^T
  Matrix V;  // m x l, row i = -(H_i x_bar_i)^T
  std::vector<Vector> x_bar_blocks;
};

/// One subdifferential row per block, realized through the support maximizer
/// of the defining problem max alpha_i^T x over {g_i <= 1}. Requires every
/// block gauge to vanish only at the origin.
PhiSubgradients phi_subgradients(const Problem& prob, const DualPoint& dp);

KKTResidual kkt_residual(const Problem& prob, const DualKKTPoint& kkt);

struct RecoveryResult {
  PrimalPoint x_star;
  OptimalityReport report;
  std::vector<Vector> x_bar_blocks;
};

/// Assembles x*_{I_i} = lambda_i x_bar_i from a KKT point of the dual and
/// certifies the result. Fails loudly when the KKT residual exceeds tol, when
/// a block with lambda_i != 0 has g_i(x_bar_i) != 1 (never silently
/// renormalized), or when a block gauge vanishes away from the origin.
RecoveryResult recover_primal(const Problem& prob, const DualKKTPoint& kkt,
                              double tol = kRecoverTol);

}  // namespace gaugekit
