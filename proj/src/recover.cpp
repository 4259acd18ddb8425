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

#include "gaugekit/recover.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/errors.hpp"

namespace gaugekit {

double KKTResidual::max_residual() const {
  return std::max({stationarity_v, stationarity_u, comp_constraint, comp_sign,
                   dual_infeasibility, sign_violation});
}

std::vector<ExtReal> phi_value(const Problem& prob, const DualPoint& dp) {
  DualSlack ds = dual_slack(prob, dp);
  return ds.polar_values;
}

namespace {

void check_kkt_dims(const Problem& prob, const DualKKTPoint& kkt) {
  require(kkt.u.size() == prob.k() && kkt.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "kkt point: (u, v) dimensions");
  require(kkt.lambda.size() == prob.m(), ErrorCode::DimensionMismatch,
          "kkt point: lambda must have one entry per block");
  require(kkt.mu.size() == prob.l(), ErrorCode::DimensionMismatch,
          "kkt point: mu must have one entry per inequality row");
  if (kkt.x_bar_blocks) {
    require(static_cast<int>(kkt.x_bar_blocks->size()) == prob.m(),
            ErrorCode::DimensionMismatch,
            "kkt point: one support vector per block");
    for (int i = 0; i < prob.m(); ++i) {
      require(static_cast<int>((*kkt.x_bar_blocks)[i].size()) ==
                  prob.gauge.partition.block_size(i),
              ErrorCode::DimensionMismatch,
              "kkt point: support vector dimension at block " +
                  std::to_string(i));
    }
  }
}

// Blockwise rows U_i = (A_i x_bar_i)^T and V_i = -(H_i x_bar_i)^T for a
// given selection of support vectors.
PhiSubgradients realize_rows(const Problem& prob,
                             std::vector<Vector> x_bars) {
  PhiSubgradients out;
  out.U = Matrix::Zero(prob.m(), prob.k());
  out.V = Matrix::Zero(prob.m(), prob.l());
  for (int i = 0; i < prob.m(); ++i) {
    Vector full = Vector::Zero(prob.n());
    prob.gauge.scatter_add(full, i, x_bars[i]);
    if (prob.k() > 0) out.U.row(i) = (prob.A * full).transpose();
    if (prob.l() > 0) out.V.row(i) = -(prob.H * full).transpose();
  }
  out.x_bar_blocks = std::move(x_bars);
  return out;
}

std::vector<Vector> select_support_vectors(const Problem& prob,
                                           const DualPoint& dp) {
  DualSlack ds = dual_slack(prob, dp);
  std::vector<Vector> x_bars;
  x_bars.reserve(prob.m());
  for (int i = 0; i < prob.m(); ++i) {
    x_bars.push_back(
        support_argmax(prob.gauge.specs[i], prob.gauge.gather(ds.alpha, i))
            .x_bar);
  }
  return x_bars;
}

}  // namespace

PhiSubgradients phi_subgradients(const Problem& prob, const DualPoint& dp) {
  require(dp.u.size() == prob.k() && dp.v.size() == prob.l(),
          ErrorCode::DimensionMismatch, "phi_subgradients: dual point");
  return realize_rows(prob, select_support_vectors(prob, dp));
}

KKTResidual kkt_residual(const Problem& prob, const DualKKTPoint& kkt) {
  check_kkt_dims(prob, kkt);
  DualPoint dp{kkt.u, kkt.v};
  PhiSubgradients sg = kkt.x_bar_blocks
                           ? realize_rows(prob, *kkt.x_bar_blocks)
                           : phi_subgradients(prob, dp);

  KKTResidual res;
  if (prob.l() > 0) {
    Vector r = prob.p + sg.V.transpose() * kkt.lambda - prob.K * kkt.lambda -
               kkt.mu;
    res.stationarity_v = inf_norm(r);
  }
  if (prob.k() > 0) {
    res.stationarity_u = inf_norm(sg.U.transpose() * kkt.lambda - prob.b);
  }

  DualSlack ds = dual_slack(prob, dp);
  double comp = 0.0;
  bool comp_finite = true;
  for (int i = 0; i < prob.m(); ++i) {
    if (kkt.lambda(i) == 0.0) continue;  // a vanished multiplier kills the term
    if (!ds.slack[i].is_finite()) {
      comp_finite = false;
      break;
    }
    comp += kkt.lambda(i) * ds.slack[i].value();
  }
  res.comp_constraint =
      comp_finite ? std::abs(comp) : std::numeric_limits<double>::infinity();
  res.comp_sign = prob.l() > 0 ? std::abs(kkt.v.dot(kkt.mu)) : 0.0;
  res.dual_infeasibility = std::max(0.0, -ds.min_slack());

  double sgn = 0.0;
  if (prob.m() > 0) sgn = std::max(sgn, -kkt.lambda.minCoeff());
  if (prob.l() > 0) {
    sgn = std::max(sgn, -kkt.mu.minCoeff());
    sgn = std::max(sgn, -kkt.v.minCoeff());
  }
  res.sign_violation = sgn;
  return res;
}

RecoveryResult recover_primal(const Problem& prob, const DualKKTPoint& kkt,
                              double tol) {
  check_kkt_dims(prob, kkt);
  require(prob.is_convex(), ErrorCode::InvalidArgument,
          "recovery requires nonnegative d and K");
  for (int i = 0; i < prob.m(); ++i) {
    require(vanishes_only_at_origin(prob.gauge.specs[i]),
            ErrorCode::GaugeNotDefinite,
            "recovery requires every block gauge to vanish only at the origin"
            " (block " + std::to_string(i) + ")");
  }

  DualPoint dp{kkt.u, kkt.v};
  DualSlack ds = dual_slack(prob, dp);

  std::vector<Vector> x_bars;
  if (kkt.x_bar_blocks) {
    // user-supplied selections take precedence after validation
    x_bars = *kkt.x_bar_blocks;
    for (int i = 0; i < prob.m(); ++i) {
      ExtReal gv = eval(prob.gauge.specs[i], x_bars[i]);
      require(gv.is_finite() && gv.value() <= 1.0 + tol,
              ErrorCode::InvalidArgument,
              "supplied support vector leaves the unit ball at block " +
                  std::to_string(i));
      if (ds.polar_values[i].is_finite()) {
        const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
        require(std::abs(alpha_i.dot(x_bars[i]) - ds.polar_values[i].value()) <=
                    tol * (1.0 + std::abs(ds.polar_values[i].value())),
                ErrorCode::InvalidArgument,
                "supplied support vector is not a maximizer at block " +
                    std::to_string(i));
      }
    }
  } else {
    x_bars = select_support_vectors(prob, dp);
  }

  DualKKTPoint kkt_full = kkt;
  kkt_full.x_bar_blocks = x_bars;
  KKTResidual res = kkt_residual(prob, kkt_full);
  if (res.max_residual() > tol) {
    fail(ErrorCode::KKTResidualTooLarge,
         "KKT residual " + std::to_string(res.max_residual()) +
             " exceeds tolerance " + std::to_string(tol));
  }

  // Sphere condition: g_i(x_bar_i) = 1 wherever lambda_i != 0.
  for (int i = 0; i < prob.m(); ++i) {
    if (std::abs(kkt.lambda(i)) <= tol) continue;
    const double gv = eval(prob.gauge.specs[i], x_bars[i]).value();
    if (std::abs(gv - 1.0) > tol) {
      const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
      std::string diag = "g(x_bar) = " + std::to_string(gv) + " at block " +
                         std::to_string(i) + " with lambda != 0";
      if (has_full_domain(prob.gauge.specs[i]) && inf_norm(alpha_i) > tol) {
        diag += " despite full domain and nonzero alpha block";
      } else {
        diag += "; sufficient condition (full domain, nonzero alpha block)"
                " does not hold here";
      }
      fail(ErrorCode::SphereConditionViolated, diag);
    }
  }

  Vector x = Vector::Zero(prob.n());
  for (int i = 0; i < prob.m(); ++i) {
    prob.gauge.scatter_add(x, i, kkt.lambda(i) * x_bars[i]);
  }
  RecoveryResult out{make_primal_point(prob, std::move(x)),
                     OptimalityReport{}, std::move(x_bars)};

  // G(x*) = lambda, blockwise.
  for (int i = 0; i < prob.m(); ++i) {
    const ExtReal gv = out.x_star.gauge_values[i];
    require(gv.is_finite() &&
                std::abs(gv.value() - kkt.lambda(i)) <= tol * (1.0 + kkt.lambda(i)),
            ErrorCode::SphereConditionViolated,
            "recovered point violates G(x*) = lambda at block " +
                std::to_string(i));
  }

  out.report = check_optimality(prob, out.x_star, dp, tol);
  if (!out.report.verdict) {
    fail(ErrorCode::RecoveryCertificateFailed,
         "recovered point failed the optimality certificate");
  }
  return out;
}

}  // namespace gaugekit
