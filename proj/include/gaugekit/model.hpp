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

#include "gaugekit/extreal.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/linalg.hpp"

namespace gaugekit {

/// Default feasibility tolerance.
constexpr double kFeasTol = 1e-8;

/// Ordered list of disjoint index sets covering {0, ..., n-1}.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;
  int total = 0;

  int count() const { return static_cast<int>(blocks.size()); }
  int block_size(int i) const { return static_cast<int>(blocks[i].size()); }
};

BlockPartition make_partition(int n, std::vector<std::vector<int>> blocks);
BlockPartition trivial_partition(int n);  // one block per coordinate

/// Blockwise stack of gauges over a partition: G(x) = (g_1(x_{I_1}), ...).
struct VectorGauge {
  BlockPartition partition;
  std::vector<GaugeSpec> specs;

  int dim() const { return partition.total; }
  int count() const { return partition.count(); }

  Vector gather(const Vector& x, int i) const;
  void scatter_add(Vector& x, int i, const Vector& xi) const;
  std::vector<ExtReal> eval_blocks(const Vector& x) const;
};

VectorGauge make_vector_gauge(BlockPartition partition,
                              std::vector<GaugeSpec> specs);

enum class ProblemKind { PositivelyHomogeneous, Gauge };

/// Problem data
///     min  c^T x + d^T G(x)
///     s.t. A x + B G(x) = b,
///          H x + K G(x) <= p,
///          x in dom G,
/// with B forced to zero for ProblemKind::Gauge. One structure serves both
/// forms so a single dualizer covers them.
struct Problem {
  Vector c, d, b, p;
  Matrix A, B, H, K;
  VectorGauge gauge;
  ProblemKind kind = ProblemKind::Gauge;

  int n() const { return static_cast<int>(c.size()); }
  int m() const { return static_cast<int>(d.size()); }
  int k() const { return static_cast<int>(b.size()); }
  int l() const { return static_cast<int>(p.size()); }

  /// d >= 0 and K >= 0 entrywise: the problem is convex.
  bool is_convex() const;
  /// d_i >= 0, B_{ji} = 0 and K_{ji} >= 0 for all rows j.
  bool block_monotone(int i) const;
  /// dom g_i = R^{n_i} and g_i not identically zero.
  bool block_full_domain_nontrivial(int i) const;
  /// Every block satisfies one of the two conditions above (the hypothesis
  /// under which the closed dual matches the Lagrangian dual).
  bool lagrangian_equivalence_ok() const;
};

Problem make_problem(Vector c, Vector d, Vector b, Vector p, Matrix A, Matrix B,
                     Matrix H, Matrix K, VectorGauge gauge, ProblemKind kind);

/// Gauge-form convenience constructor (B = 0).
Problem make_gauge_problem(Vector c, Vector d, Vector b, Vector p, Matrix A,
                           Matrix H, Matrix K, VectorGauge gauge);

struct PrimalPoint {
  Vector x;
  std::vector<ExtReal> gauge_values;

  bool in_domain() const;
};

PrimalPoint make_primal_point(const Problem& prob, Vector x);

struct FeasReport {
  double eq_residual = 0.0;
  double ineq_violation = 0.0;
  bool in_domain = true;
  bool feasible = false;
};

/// c^T x + d^T G(x); +inf when x is outside dom G.
ExtReal primal_objective(const Problem& prob, const PrimalPoint& pt);

FeasReport primal_feasibility(const Problem& prob, const PrimalPoint& pt,
                              double tol = kFeasTol);

}  // namespace gaugekit
