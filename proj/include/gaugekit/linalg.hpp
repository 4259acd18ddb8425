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

#include <Eigen/Dense>

namespace gaugekit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline double inf_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// Minimum-norm description of the affine set {x | Ax = b}: a least-squares
/// particular point, an orthonormal basis of null(A), the numerical rank, and
/// the residual ||A x0 - b||_inf (nonzero residual means the set is empty).
struct AffineSet {
  Vector particular;
  Matrix nullspace;  // n x (n - rank), orthonormal columns
  int rank = 0;
  double residual = 0.0;

  bool consistent(double tol = 1e-9) const { return residual <= tol; }
};

AffineSet affine_set(const Matrix& A, const Vector& b, double rank_tol = 1e-10);

/// Least-squares solution of min ||Ax - b||_2 (minimum-norm when rank
/// deficient).
Vector least_squares(const Matrix& A, const Vector& b);

/// Nonnegative least squares: minimize ||Ax - b||_2 subject to x >= 0.
/// Lawson-Hanson active set; deterministic.
Vector nnls(const Matrix& A, const Vector& b, int max_iter = 0);

/// Euclidean projection of y onto the cone {M^T nu | nu >= 0} generated by
/// the rows of M.
Vector project_onto_generated_cone(const Matrix& M, const Vector& y);

/// Symmetric eigenvalue floor check used to validate PSD inputs.
double min_eigenvalue(const Matrix& sym);

}  // namespace gaugekit
