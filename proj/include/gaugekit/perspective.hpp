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

#include <variant>
#include <vector>

#include "gaugekit/extreal.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/linalg.hpp"
#include "gaugekit/model.hpp"

namespace gaugekit {

/// f(x) = x^T Q x + q^T x + r with Q symmetric PSD.
struct ConvexQuadratic {
  Matrix Q;
  Vector q;
  double r;
};

/// f(x) = max(0, a^T x + r).
struct AffinePlus {
  Vector a;
  double r;
};

/// A gauge used as a (nonnegative) convex function.
struct GaugeWrapped {
  GaugeSpec g;
};

/// g(x) - eta^T x with g°(eta) <= 1; again a gauge. Produced when
/// decomposing a gauge-valued f around an anchor where f does not vanish.
struct GaugeMinusLinear {
  GaugeSpec g;
  Vector eta;
};

struct ConvexSpec {
  std::variant<ConvexQuadratic, AffinePlus, GaugeWrapped, GaugeMinusLinear> fn;
  int dim() const;
};

ConvexSpec make_quadratic(Matrix Q, Vector q, double r);
ConvexSpec make_affine_plus(Vector a, double r);
ConvexSpec make_gauge_wrapped(GaugeSpec g);
ConvexSpec make_gauge_minus_linear(GaugeSpec g, Vector eta);

ExtReal eval_convex(const ConvexSpec& f, const Vector& x);

/// A subgradient of f at z (2Qz + q for quadratics; for piecewise functions
/// the selection is deterministic).
Vector convex_subgradient(const ConvexSpec& f, const Vector& z);

/// Recession function h^inf(x) = lim_{t->inf} h(tx) / t, analytic per
/// variant. For a quadratic nonnegative part: q^T x on null(Q), +inf off it.
ExtReal recession_value(const ConvexSpec& h, const Vector& x);

/// Greatest lower bound of f over R^dim (-inf if unbounded below).
ExtReal convex_min_value(const ConvexSpec& f);

/// f split around an anchor z with eta in the subdifferential at z:
/// f(x) = nonneg_part(x) + eta^T x + linear_constant, nonneg_part >= 0.
struct Decomposition {
  Vector z;
  Vector eta;
  ConvexSpec nonneg_part;
  double linear_constant;
};

Decomposition decompose(const ConvexSpec& f, const Vector& z);

/// Closed perspective h^pi(x, zeta): zeta h(x/zeta) for zeta > 0, the
/// recession function of h at zeta = 0, +inf for zeta < 0.
ExtReal eval_perspective(const ConvexSpec& h, const Vector& x, double zeta);

/// Polar of the perspective gauge: sup { x^T y + zeta tau | h^pi(x, zeta) <= 1 }.
/// Closed form for gauge-backed h; an LP for piecewise-linear h; otherwise a
/// numeric support maximization with documented accuracy ~1e-6.
ExtReal perspective_polar(const ConvexSpec& h, const Vector& y, double tau);

/// True when h^pi vanishes only at the lifted origin.
bool perspective_definite(const ConvexSpec& h);

/// Source problem with nonnegative convex blocks:
///     min c^T x + d^T F(x)  s.t.  A x = b, H x + K F(x) <= p.
struct ConvexProblem {
  Vector c, d, b, p;
  Matrix A, H, K;
  BlockPartition partition;
  std::vector<ConvexSpec> f;
  double objective_offset = 0.0;

  int n() const { return static_cast<int>(c.size()); }
  int m() const { return static_cast<int>(d.size()); }
  int k() const { return static_cast<int>(b.size()); }
  int l() const { return static_cast<int>(p.size()); }
};

ConvexProblem make_convex_problem(Vector c, Vector d, Vector b, Vector p,
                                  Matrix A, Matrix H, Matrix K,
                                  BlockPartition partition,
                                  std::vector<ConvexSpec> f,
                                  double objective_offset = 0.0);

ExtReal convex_objective(const ConvexProblem& pf, const Vector& x);
FeasReport convex_feasibility(const ConvexProblem& pf, const Vector& x,
                              double tol = kFeasTol);

/// Rewrites a problem with general convex blocks into one with nonnegative
/// blocks by decomposing each f_i around an anchor (the origin by default)
/// and folding the linear parts into c, H, p and the objective offset.
struct NonnegativeReduction {
  ConvexProblem shifted;
  std::vector<Decomposition> decompositions;
};
NonnegativeReduction fold_to_nonnegative(const ConvexProblem& pf);
NonnegativeReduction fold_to_nonnegative(const ConvexProblem& pf,
                                         const std::vector<Vector>& anchors);

/// Lifted problem over z = (x_{I_1}, zeta_1, ..., x_{I_m}, zeta_m) with unit
/// rows pinning each zeta_i = 1; equality rows and pin rows interleave (the
/// leftover rows append at the end when the counts differ).
struct PerspectiveProblem {
  Problem lifted;
  ConvexProblem source;
  std::vector<int> zeta_position;   // lifted column of zeta_i
  std::vector<int> pin_row;         // lifted equality row pinning zeta_i
  std::vector<int> source_column;   // lifted column of each source variable
};

PerspectiveProblem build_perspective_problem(const ConvexProblem& pf);

/// Dual side of the lifted problem. The lifted dual vector u_hat in R^{k+m}
/// splits into the original equality multipliers u and the pin multipliers w;
/// the dual objective b_hat^T u_hat - p^T v equals b^T u - p^T v + sum w.
struct PerspectiveDual {
  Problem lifted;
  std::vector<int> u_rows;  // positions of the original equality rows in u_hat
  std::vector<int> w_rows;  // positions of the pin rows in u_hat
};

PerspectiveDual build_perspective_dual(const PerspectiveProblem& pp);

/// Packs (u, v, w) into a lifted dual vector pair (u_hat, v).
std::pair<Vector, Vector> assemble_lifted_dual(const PerspectiveDual& pd,
                                               const Vector& u, const Vector& v,
                                               const Vector& w);

/// Embeds a source-variable point x with zeta = 1 into the lifted space.
Vector lift_primal(const PerspectiveProblem& pp, const Vector& x);

}  // namespace gaugekit
