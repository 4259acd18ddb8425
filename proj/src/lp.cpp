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

#include "gaugekit/lp.hpp"

#include <algorithm>
#include <vector>

#include "gaugekit/errors.hpp"

namespace gaugekit {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;

// Row-reduced tableau: D holds the constraint matrix with an appended rhs
// column, kept so that the basis columns form an identity.
struct Tableau {
  Matrix D;                // m x (ncols + 1)
  std::vector<int> basis;  // basic column per row

  int rows() const { return static_cast<int>(D.rows()); }
  int cols() const { return static_cast<int>(D.cols()) - 1; }
  double rhs(int r) const { return D(r, cols()); }

  void pivot(int r, int j) {
    D.row(r) /= D(r, j);
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double f = D(i, j);
      if (f != 0.0) D.row(i) -= f * D.row(r);
    }
    basis[r] = j;
  }
};

enum class PhaseOutcome { Optimal, Unbounded, IterLimit };

// Bland's rule: entering = lowest eligible index, leaving = lowest basic
// index among minimum-ratio rows. `allowed` caps the entering columns.
PhaseOutcome run_simplex(Tableau& tab, const Vector& cost, int allowed,
                         int max_iter, int* iter_count, int* unbounded_col) {
  const int m = tab.rows();
  for (int it = 0; it < max_iter; ++it) {
    ++*iter_count;
    Vector cb(m);
    for (int r = 0; r < m; ++r) cb(r) = cost(tab.basis[r]);

    int enter = -1;
    for (int j = 0; j < allowed; ++j) {
      double rc = cost(j) - cb.dot(tab.D.col(j));
      if (rc < -kReducedCostTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return PhaseOutcome::Optimal;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      const double a = tab.D(r, enter);
      if (a > kPivotTol) {
        const double ratio = tab.rhs(r) / a;
        if (leave < 0 || ratio < best_ratio - kPivotTol ||
            (std::abs(ratio - best_ratio) <= kPivotTol &&
             tab.basis[r] < tab.basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      *unbounded_col = enter;
      return PhaseOutcome::Unbounded;
    }
    tab.pivot(leave, enter);
  }
  return PhaseOutcome::IterLimit;
}

}  // namespace

LpResult lp_solve(const Vector& c, const Matrix& A_eq, const Vector& b_eq,
                  const Matrix& A_ub, const Vector& b_ub, int max_iter) {
  const int n = static_cast<int>(c.size());
  const int me = static_cast<int>(A_eq.rows());
  const int mu = static_cast<int>(A_ub.rows());
  require(A_eq.cols() == n || me == 0, ErrorCode::DimensionMismatch,
          "lp_solve: A_eq column count");
  require(A_ub.cols() == n || mu == 0, ErrorCode::DimensionMismatch,
          "lp_solve: A_ub column count");
  const int m = me + mu;

  LpResult out;
  if (m == 0) {
    if (inf_norm(c) > 0.0) {
      out.status = LpStatus::Unbounded;
      out.ray = -c;  // strict descent direction
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x = Vector::Zero(n);
    out.objective = 0.0;
    return out;
  }

  // Standard form over z = (x+, x-, s) >= 0, rows sign-normalized to rhs >= 0,
  // then one artificial per row for phase 1.
  const int nz = 2 * n + mu;
  const int ncols = nz + m;
  if (max_iter <= 0) max_iter = 200 + 20 * (ncols + m);

  Matrix A0(m, nz);
  Vector b0(m), sigma(m);
  for (int i = 0; i < m; ++i) {
    Vector row(n);
    double bi;
    if (i < me) {
      row = A_eq.row(i);
      bi = b_eq(i);
    } else {
      row = A_ub.row(i - me);
      bi = b_ub(i - me);
    }
    const double s = (bi < 0.0) ? -1.0 : 1.0;
    sigma(i) = s;
    A0.row(i).segment(0, n) = s * row.transpose();
    A0.row(i).segment(n, n) = -s * row.transpose();
    A0.row(i).segment(2 * n, mu).setZero();
    if (i >= me) A0(i, 2 * n + (i - me)) = s;
    b0(i) = s * bi;
  }

  Tableau tab;
  tab.D.resize(m, ncols + 1);
  tab.D.block(0, 0, m, nz) = A0;
  tab.D.block(0, nz, m, m) = Matrix::Identity(m, m);
  tab.D.col(ncols) = b0;
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) tab.basis[i] = nz + i;

  Vector phase1_cost = Vector::Zero(ncols);
  for (int j = nz; j < ncols; ++j) phase1_cost(j) = 1.0;

  int unbounded_col = -1;
  PhaseOutcome ph1 = run_simplex(tab, phase1_cost, ncols, max_iter,
                                 &out.iterations, &unbounded_col);
  if (ph1 == PhaseOutcome::IterLimit) {
    out.status = LpStatus::IterLimit;
    return out;
  }
  double art_sum = 0.0;
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] >= nz) art_sum += tab.rhs(r);
  }
  if (art_sum > 1e-8 * (1.0 + inf_norm(b0))) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  // Drive zero-level artificials out of the basis; a row with no real pivot
  // left is redundant and gets dropped.
  std::vector<int> keep_rows;
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nz) {
      keep_rows.push_back(r);
      continue;
    }
    int piv = -1;
    for (int j = 0; j < nz; ++j) {
      if (std::abs(tab.D(r, j)) > 1e-8) {
        piv = j;
        break;
      }
    }
    if (piv >= 0) {
      tab.pivot(r, piv);
      keep_rows.push_back(r);
    }
  }
  if (static_cast<int>(keep_rows.size()) < m) {
    Matrix D2(keep_rows.size(), ncols + 1);
    std::vector<int> basis2;
    for (size_t t = 0; t < keep_rows.size(); ++t) {
      D2.row(t) = tab.D.row(keep_rows[t]);
      basis2.push_back(tab.basis[keep_rows[t]]);
    }
    tab.D = std::move(D2);
    tab.basis = std::move(basis2);
  }

  Vector phase2_cost = Vector::Zero(ncols);
  phase2_cost.segment(0, n) = c;
  phase2_cost.segment(n, n) = -c;

  PhaseOutcome ph2 = run_simplex(tab, phase2_cost, nz, max_iter,
                                 &out.iterations, &unbounded_col);
  if (ph2 == PhaseOutcome::IterLimit) {
    out.status = LpStatus::IterLimit;
    return out;
  }

  auto z_to_x = [&](const Vector& z) {
    return Vector(z.segment(0, n) - z.segment(n, n));
  };

  if (ph2 == PhaseOutcome::Unbounded) {
    Vector zray = Vector::Zero(nz);
    zray(unbounded_col) = 1.0;
    for (int r = 0; r < tab.rows(); ++r) {
      if (tab.basis[r] < nz) zray(tab.basis[r]) = -tab.D(r, unbounded_col);
    }
    out.status = LpStatus::Unbounded;
    out.ray = z_to_x(zray);
    return out;
  }

  Vector z = Vector::Zero(nz);
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis[r] < nz) z(tab.basis[r]) = tab.rhs(r);
  }
  out.x = z_to_x(z);
  out.objective = c.dot(out.x);
  out.status = LpStatus::Optimal;

  // Row multipliers from B^T y = c_B on the surviving rows; dropped
  // (redundant) rows get multiplier zero.
  const int mr = tab.rows();
  Matrix B(mr, mr);
  Vector cB(mr);
  for (int col = 0; col < mr; ++col) {
    for (int r = 0; r < mr; ++r) {
      B(r, col) = A0(keep_rows[r], tab.basis[col]);
    }
    cB(col) = phase2_cost(tab.basis[col]);
  }
  Vector y = B.transpose().fullPivLu().solve(cB);
  Vector y_full = Vector::Zero(m);
  for (int r = 0; r < mr; ++r) y_full(keep_rows[r]) = sigma(keep_rows[r]) * y(r);
  out.dual_eq = y_full.segment(0, me);
  out.dual_ub = y_full.segment(me, mu);
  return out;
}

}  // namespace gaugekit
