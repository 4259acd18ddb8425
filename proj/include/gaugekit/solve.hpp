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

#include "gaugekit/certify.hpp"
#include "gaugekit/dual.hpp"
#include "gaugekit/lp.hpp"
#include "gaugekit/model.hpp"
#include "gaugekit/perspective.hpp"
#include "gaugekit/recover.hpp"

namespace gaugekit {

enum class SolveStatus { Optimal, ToleranceReached, IterLimit, Infeasible, Unbounded };

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::IterLimit;
  Vector x;                        // primal point, when primal-side
  std::optional<DualPoint> dual;   // dual point, when dual-side
  double objective = 0.0;
  int iterations = 0;
  double accuracy = 0.0;  // grid-resolution bound (oracle) / final gap bound
  std::optional<OptimalityReport> certificate;
};

/// Exhaustive oracle over the affine slice {Ax = b} with iterative zoom.
/// The equality system is reduced by least squares; the residual coordinates
/// are gridded over [-box, box], then the window shrinks around the incumbent
/// `refine_levels` times. `accuracy` reports spacing x local-slope.
struct OracleOptions {
  double box = 3.0;
  int grid_points_per_dim = 61;  // <= 201
  int refine_levels = 3;
  bool parallel = true;
  double feas_tol = kFeasTol;
};

SolveResult oracle_solve_primal(const Problem& prob, const OracleOptions& opts = {});
SolveResult oracle_solve_epigraph(const EpigraphProblem& ep, const OracleOptions& opts = {});
SolveResult oracle_solve_convex(const ConvexProblem& pf, const OracleOptions& opts = {});

/// Penalized projected subgradient ascent on the dual:
/// maximize b^T u - p^T v - rho * sum_i max(0, [G°(alpha) + B^T u - K^T v - d]_i)
/// with v projected onto v >= 0 each step and diminishing steps a / (1 + t).
/// Blocks whose polar is infinite at the iterate trigger an explicit
/// feasibility step along the certified divergence ray instead of a penalty
/// term. Restarts are isolated and merge deterministically (best merit, then
/// lowest restart index).
struct SubgradientOptions {
  double rho = 0.0;   // <= 0: 10 * (1 + ||d||_inf + ||b||_inf)
  double step = 0.0;  // <= 0: 1 / rho
  int iters = 50000;
  int restarts = 5;
  unsigned long seed = 1;
  double feas_tol = 1e-6;
  bool parallel = true;
};

SolveResult solve_dual_subgradient(const Problem& prob,
                                   const SubgradientOptions& opts = {});

/// Cutting-plane refinement of a dual iterate: outer linearization of the
/// blockwise polar constraints solved as a sequence of LPs until the LP
/// argmax is feasible. Polyhedral instances finish finitely; smooth polars
/// converge to ~1e-9 violation. Not available for perspective blocks.
struct PolishOptions {
  int max_rounds = 600;
  double violation_tol = 1e-9;
  int kept_cuts = 240;
};

SolveResult polish_dual(const Problem& prob, const DualPoint& warm,
                        const PolishOptions& opts = {});

/// Multipliers (lambda, mu) for the dual KKT system at a (near-) optimal
/// dual point: lambda >= 0 supported on active blocks via nonnegative least
/// squares, mu from stationarity in v.
DualKKTPoint extract_kkt(const Problem& prob, const DualPoint& dp,
                         double active_tol = 1e-6);

/// LP front end in the module's result vocabulary.
SolveResult solve_lp(const Vector& c, const Matrix& A_eq, const Vector& b_eq,
                     const Matrix& A_ub, const Vector& b_ub);

/// Deterministic strict-feasibility probe: a point with Ax = b,
/// H x + K G(x) <= p - margin and x interior to dom G, if the sampling finds
/// one.
std::optional<Vector> find_slater_point(const Problem& prob,
                                        double margin = 1e-6,
                                        int samples = 4096,
                                        unsigned long seed = 7);

}  // namespace gaugekit
