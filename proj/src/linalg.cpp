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

#include "gaugekit/linalg.hpp"

#include <algorithm>
#include <vector>

#include "gaugekit/errors.hpp"

namespace gaugekit {

AffineSet affine_set(const Matrix& A, const Vector& b, double rank_tol) {
  const int n = static_cast<int>(A.cols());
  AffineSet out;
  if (A.rows() == 0) {
    out.particular = Vector::Zero(n);
    out.nullspace = Matrix::Identity(n, n);
    out.rank = 0;
    out.residual = 0.0;
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = std::max(rank_tol, rank_tol * smax);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++rank;
  }
  Vector uty = svd.matrixU().transpose() * b;
  Vector z = Vector::Zero(n);
  for (int i = 0; i < rank; ++i) z(i) = uty(i) / sv(i);
  out.particular = svd.matrixV() * z;
  out.nullspace = svd.matrixV().rightCols(n - rank);
  out.rank = rank;
  out.residual = inf_norm(A * out.particular - b);
  return out;
}

Vector least_squares(const Matrix& A, const Vector& b) {
  if (A.rows() == 0 || A.cols() == 0) return Vector::Zero(A.cols());
  return A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
}

Vector nnls(const Matrix& A, const Vector& b, int max_iter) {
  const int n = static_cast<int>(A.cols());
  if (n == 0) return Vector();
  if (max_iter <= 0) max_iter = 10 * std::max(1, n);
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(n, false);
  Vector w = A.transpose() * (b - A * x);
  const double tol = 1e-11 * (1.0 + inf_norm(b));

  for (int outer = 0; outer < max_iter; ++outer) {
    // most-positive gradient among active (zero) coordinates
    int t = -1;
    double wmax = tol;
    for (int j = 0; j < n; ++j) {
      if (!passive[j] && w(j) > wmax) {
        wmax = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[t] = true;

    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<int> idx;
      for (int j = 0; j < n; ++j) {
        if (passive[j]) idx.push_back(j);
      }
      Matrix Ap(A.rows(), idx.size());
      for (size_t c = 0; c < idx.size(); ++c) Ap.col(c) = A.col(idx[c]);
      Vector zp = least_squares(Ap, b);

      double alpha = 1.0;
      int blocker = -1;
      for (size_t c = 0; c < idx.size(); ++c) {
        if (zp(c) <= 0.0) {
          double a = x(idx[c]) / (x(idx[c]) - zp(c));
          if (a < alpha) {
            alpha = a;
            blocker = static_cast<int>(c);
          }
        }
      }
      if (blocker < 0) {
        x.setZero();
        for (size_t c = 0; c < idx.size(); ++c) x(idx[c]) = zp(c);
        break;
      }
      for (size_t c = 0; c < idx.size(); ++c) {
        x(idx[c]) += alpha * (zp(c) - x(idx[c]));
      }
      for (size_t c = 0; c < idx.size(); ++c) {
        if (x(idx[c]) <= tol) {
          x(idx[c]) = 0.0;
          passive[idx[c]] = false;
        }
      }
    }
    w = A.transpose() * (b - A * x);
  }
  return x;
}

Vector project_onto_generated_cone(const Matrix& M, const Vector& y) {
  if (M.rows() == 0) return Vector::Zero(y.size());
  Vector nu = nnls(M.transpose(), y);
  return M.transpose() * nu;
}

double min_eigenvalue(const Matrix& sym) {
  if (sym.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (sym + sym.transpose()));
  return es.eigenvalues().minCoeff();
}

}  // namespace gaugekit
