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

#include "gaugekit/model.hpp"

#include <algorithm>

#include "gaugekit/errors.hpp"

namespace gaugekit {

BlockPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
  require(n >= 1, ErrorCode::InvalidArgument, "partition: n >= 1");
  std::vector<int> seen(n, 0);
  for (const auto& blk : blocks) {
    require(!blk.empty(), ErrorCode::InvalidArgument, "partition: empty block");
    for (int idx : blk) {
      require(idx >= 0 && idx < n, ErrorCode::InvalidArgument,
              "partition: index out of range");
      require(seen[idx] == 0, ErrorCode::InvalidArgument,
              "partition: blocks overlap at index " + std::to_string(idx));
      seen[idx] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    require(seen[i] == 1, ErrorCode::InvalidArgument,
            "partition: index " + std::to_string(i) + " not covered");
  }
  BlockPartition part;
  part.blocks = std::move(blocks);
  part.total = n;
  return part;
}

BlockPartition trivial_partition(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {i};
  return make_partition(n, std::move(blocks));
}

Vector VectorGauge::gather(const Vector& x, int i) const {
  const auto& blk = partition.blocks[i];
  Vector xi(blk.size());
  for (size_t t = 0; t < blk.size(); ++t) xi(t) = x(blk[t]);
  return xi;
}

void VectorGauge::scatter_add(Vector& x, int i, const Vector& xi) const {
  const auto& blk = partition.blocks[i];
  for (size_t t = 0; t < blk.size(); ++t) x(blk[t]) += xi(t);
}

std::vector<ExtReal> VectorGauge::eval_blocks(const Vector& x) const {
  std::vector<ExtReal> vals;
  vals.reserve(specs.size());
  for (int i = 0; i < count(); ++i) vals.push_back(eval(specs[i], gather(x, i)));
  return vals;
}

VectorGauge make_vector_gauge(BlockPartition partition,
                              std::vector<GaugeSpec> specs) {
  require(partition.count() == static_cast<int>(specs.size()),
          ErrorCode::DimensionMismatch, "vector gauge: one spec per block");
  for (int i = 0; i < partition.count(); ++i) {
    require(specs[i].dim() == partition.block_size(i),
            ErrorCode::DimensionMismatch,
            "vector gauge: spec dimension mismatch at block " +
                std::to_string(i));
  }
  return VectorGauge{std::move(partition), std::move(specs)};
}

bool Problem::is_convex() const {
  if (m() > 0 && d.minCoeff() < 0.0) return false;
  if (K.size() > 0 && K.minCoeff() < 0.0) return false;
  return true;
}

bool Problem::block_monotone(int i) const {
  if (d(i) < 0.0) return false;
  for (int j = 0; j < k(); ++j) {
    if (B(j, i) != 0.0) return false;
  }
  for (int j = 0; j < l(); ++j) {
    if (K(j, i) < 0.0) return false;
  }
  return true;
}

bool Problem::block_full_domain_nontrivial(int i) const {
  return has_full_domain(gauge.specs[i]) && not_identically_zero(gauge.specs[i]);
}

bool Problem::lagrangian_equivalence_ok() const {
  for (int i = 0; i < m(); ++i) {
    if (!block_monotone(i) && !block_full_domain_nontrivial(i)) return false;
  }
  return true;
}

Problem make_problem(Vector c, Vector d, Vector b, Vector p, Matrix A, Matrix B,
                     Matrix H, Matrix K, VectorGauge gauge, ProblemKind kind) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(d.size());
  const int k = static_cast<int>(b.size());
  const int l = static_cast<int>(p.size());
  if (A.size() == 0) A = Matrix::Zero(k, n);
  if (B.size() == 0) B = Matrix::Zero(k, m);
  if (H.size() == 0) H = Matrix::Zero(l, n);
  if (K.size() == 0) K = Matrix::Zero(l, m);
  require(A.rows() == k && A.cols() == n, ErrorCode::DimensionMismatch, "A is k x n");
  require(B.rows() == k && B.cols() == m, ErrorCode::DimensionMismatch, "B is k x m");
  require(H.rows() == l && H.cols() == n, ErrorCode::DimensionMismatch, "H is l x n");
  require(K.rows() == l && K.cols() == m, ErrorCode::DimensionMismatch, "K is l x m");
  require(gauge.dim() == n, ErrorCode::DimensionMismatch,
          "gauge partition must cover all variables");
  require(gauge.count() == m, ErrorCode::DimensionMismatch,
          "d must have one entry per gauge block");
  if (kind == ProblemKind::Gauge) {
    require(B.size() == 0 || B.cwiseAbs().maxCoeff() == 0.0,
            ErrorCode::InvalidArgument,
            "gauge-form problems carry no nonlinear term in equalities (B = 0)");
  }
  Problem prob;
  prob.c = std::move(c);
  prob.d = std::move(d);
  prob.b = std::move(b);
  prob.p = std::move(p);
  prob.A = std::move(A);
  prob.B = std::move(B);
  prob.H = std::move(H);
  prob.K = std::move(K);
  prob.gauge = std::move(gauge);
  prob.kind = kind;
  return prob;
}

Problem make_gauge_problem(Vector c, Vector d, Vector b, Vector p, Matrix A,
                           Matrix H, Matrix K, VectorGauge gauge) {
  Matrix B = Matrix::Zero(b.size(), d.size());
  return make_problem(std::move(c), std::move(d), std::move(b), std::move(p),
                      std::move(A), std::move(B), std::move(H), std::move(K),
                      std::move(gauge), ProblemKind::Gauge);
}

bool PrimalPoint::in_domain() const {
  for (const auto& v : gauge_values) {
    if (!v.is_finite()) return false;
  }
  return true;
}

PrimalPoint make_primal_point(const Problem& prob, Vector x) {
  require(static_cast<int>(x.size()) == prob.n(), ErrorCode::DimensionMismatch,
          "primal point length");
  PrimalPoint pt;
  pt.gauge_values = prob.gauge.eval_blocks(x);
  pt.x = std::move(x);
  return pt;
}

ExtReal primal_objective(const Problem& prob, const PrimalPoint& pt) {
  if (!pt.in_domain()) return ExtReal::infinity();
  double obj = prob.c.dot(pt.x);
  for (int i = 0; i < prob.m(); ++i) obj += prob.d(i) * pt.gauge_values[i].value();
  return obj;
}

FeasReport primal_feasibility(const Problem& prob, const PrimalPoint& pt,
                              double tol) {
  require(tol >= 0.0, ErrorCode::InvalidArgument, "feasibility tol >= 0");
  FeasReport rep;
  rep.in_domain = pt.in_domain();
  if (!rep.in_domain) {
    rep.eq_residual = std::numeric_limits<double>::infinity();
    rep.ineq_violation = std::numeric_limits<double>::infinity();
    rep.feasible = false;
    return rep;
  }
  Vector gv(prob.m());
  for (int i = 0; i < prob.m(); ++i) gv(i) = pt.gauge_values[i].value();
  if (prob.k() > 0) {
    rep.eq_residual = inf_norm(prob.A * pt.x + prob.B * gv - prob.b);
  }
  if (prob.l() > 0) {
    Vector slack = prob.H * pt.x + prob.K * gv - prob.p;
    rep.ineq_violation = std::max(0.0, slack.maxCoeff());
  }
  rep.feasible = rep.eq_residual <= tol && rep.ineq_violation <= tol;
  return rep;
}

}  // namespace gaugekit
