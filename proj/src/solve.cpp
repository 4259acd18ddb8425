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

#include "gaugekit/solve.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>

#include "gaugekit/errors.hpp"
#include "gaugekit/gridscan.hpp"
#include "gaugekit/rng.hpp"

namespace gaugekit {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::ToleranceReached: return "tolerance_reached";
    case SolveStatus::IterLimit: return "iter_limit";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// ---------------------------------------------------------------------------
// Oracle: grid over the null-space coordinates of the equality system, with
// iterative zoom around the incumbent.
// ---------------------------------------------------------------------------

SolveResult oracle_core(const AffineSet& aff, int total_vars,
                        const std::function<double(const Vector&)>& value_of,
                        const OracleOptions& opts) {
  SolveResult res;
  if (!aff.consistent(1e-8)) {
    res.status = SolveStatus::Infeasible;
    return res;
  }
  const int free_d = total_vars - aff.rank;
  require(free_d <= 4, ErrorCode::DimensionTooLarge,
          "oracle: grid dimensionality after equality reduction is " +
              std::to_string(free_d) + " (> 4)");
  require(opts.grid_points_per_dim >= 3 && opts.grid_points_per_dim <= 201,
          ErrorCode::InvalidArgument, "oracle: grid points per dim in [3, 201]");
  require(opts.box > 0.0, ErrorCode::InvalidArgument, "oracle: box > 0");

  if (free_d == 0) {
    const double v = value_of(aff.particular);
    if (!std::isfinite(v)) {
      res.status = SolveStatus::Infeasible;
      return res;
    }
    res.status = SolveStatus::ToleranceReached;
    res.x = aff.particular;
    res.objective = v;
    res.iterations = 1;
    res.accuracy = 0.0;
    return res;
  }

  auto eval_xi = [&](const Vector& xi) {
    return value_of(aff.particular + aff.nullspace * xi);
  };

  Vector center = Vector::Zero(free_d);
  double halfw = opts.box;
  const int steps = opts.grid_points_per_dim;
  GridBest incumbent;
  double spacing = 0.0;
  std::int64_t evals = 0;

  // Window-riding scans (incumbent on the window edge) recenter without
  // shrinking and draw from a separate drift budget, so the zoom levels all
  // tighten the spacing.
  int zooms = 0, drifts = 0;
  while (zooms <= opts.refine_levels && drifts < 16) {
    GridSpec spec{Vector(center.array() - halfw), Vector(center.array() + halfw),
                  steps};
    GridBest gb = grid_scan(spec, eval_xi, opts.parallel);
    evals += gb.evaluated;
    spacing = 2.0 * halfw / (steps - 1);
    if (!gb.found()) {
      if (!incumbent.found()) {
        res.status = SolveStatus::Infeasible;
        res.iterations = static_cast<int>(evals);
        return res;
      }
      break;
    }
    if (!incumbent.found() || gb.value <= incumbent.value) incumbent = gb;
    bool on_edge = false;
    for (int i = 0; i < free_d; ++i) {
      if (std::abs(gb.point(i) - spec.lo(i)) <= 0.5 * spacing ||
          std::abs(gb.point(i) - spec.hi(i)) <= 0.5 * spacing) {
        on_edge = true;
      }
    }
    center = gb.point;
    if (on_edge) {
      ++drifts;
    } else {
      halfw = 2.0 * spacing;  // zoom: the next window spans +-2 cells
      ++zooms;
    }
  }

  // Compass descent from the incumbent: the grid argmin of a flat valley can
  // sit well away from the optimum even when its value is close; the descent
  // walks the valley at far finer resolution than the final grid.
  Vector xi = incumbent.point;
  double fx = incumbent.value;
  {
    std::vector<Vector> dirs;
    for (int i = 0; i < free_d; ++i) {
      Vector e = Vector::Zero(free_d);
      e(i) = 1.0;
      dirs.push_back(e);
      dirs.push_back(-e);
    }
    for (int i = 0; i < free_d; ++i) {
      for (int j = i + 1; j < free_d; ++j) {
        for (double si : {1.0, -1.0}) {
          for (double sj : {1.0, -1.0}) {
            Vector e = Vector::Zero(free_d);
            e(i) = si;
            e(j) = sj;
            dirs.push_back(e / std::sqrt(2.0));
          }
        }
      }
    }
    double h = spacing;
    int local_evals = 0;
    while (h > 1e-10 && local_evals < 40000) {
      bool improved = false;
      for (const Vector& dir : dirs) {
        Vector cand = xi + h * dir;
        const double fc = eval_xi(cand);
        ++local_evals;
        if (fc < fx - 1e-15) {
          xi = cand;
          fx = fc;
          improved = true;
          break;
        }
      }
      h = improved ? std::min(spacing, 2.0 * h) : 0.5 * h;
    }
    evals += local_evals;
    spacing = std::max(h, 1e-10);
  }

  // local slope estimate for the reported accuracy bound
  double slope = 1.0;
  for (int i = 0; i < free_d; ++i) {
    for (double sgn : {1.0, -1.0}) {
      Vector probe = xi;
      probe(i) += sgn * spacing;
      const double v = eval_xi(probe);
      if (std::isfinite(v)) {
        slope = std::max(slope, std::abs(v - fx) / spacing);
      }
    }
  }

  res.status = SolveStatus::ToleranceReached;
  res.x = aff.particular + aff.nullspace * xi;
  res.objective = fx;
  res.iterations = static_cast<int>(std::min<std::int64_t>(
      evals, std::numeric_limits<int>::max()));
  res.accuracy = spacing * slope;
  return res;
}

}  // namespace

SolveResult oracle_solve_primal(const Problem& prob, const OracleOptions& opts) {
  require(prob.B.size() == 0 || prob.B.cwiseAbs().maxCoeff() == 0.0,
          ErrorCode::InvalidArgument,
          "oracle requires equality constraints without gauge terms (B = 0)");
  AffineSet aff = affine_set(prob.A, prob.b);
  auto value_of = [&](const Vector& x) -> double {
    PrimalPoint pt = make_primal_point(prob, x);
    FeasReport fr = primal_feasibility(prob, pt, opts.feas_tol);
    if (!fr.feasible) return std::numeric_limits<double>::infinity();
    return primal_objective(prob, pt).value();
  };
  return oracle_core(aff, prob.n(), value_of, opts);
}

SolveResult oracle_solve_epigraph(const EpigraphProblem& ep,
                                  const OracleOptions& opts) {
  const Problem& src = ep.source;
  const int n = src.n(), m = src.m();

  if (src.B.size() == 0 || src.B.cwiseAbs().maxCoeff() == 0.0) {
    // With B = 0 the feasible set maps bijectively onto
    //   {(x, s) | Ax = b, s >= 0} via y = G(x) + s,
    // which removes the thin wedge along the coupling boundary G(x) <= y
    // that defeats direct (x, y) scans.
    AffineSet ax = affine_set(src.A, src.b);
    AffineSet lifted;
    lifted.particular = Vector::Zero(n + m);
    lifted.particular.head(n) = ax.particular;
    lifted.nullspace = Matrix::Zero(n + m, n - ax.rank + m);
    lifted.nullspace.block(0, 0, n, n - ax.rank) = ax.nullspace;
    lifted.nullspace.block(n, n - ax.rank, m, m) = Matrix::Identity(m, m);
    lifted.rank = ax.rank;
    lifted.residual = ax.residual;

    auto value_of = [&](const Vector& zs) -> double {
      Vector x = zs.head(n), s = zs.tail(m);
      if (m > 0 && s.minCoeff() < 0.0)
        return std::numeric_limits<double>::infinity();
      Vector y(m);
      for (int i = 0; i < m; ++i) {
        ExtReal gv = eval(src.gauge.specs[i], src.gauge.gather(x, i));
        if (!gv.is_finite()) return std::numeric_limits<double>::infinity();
        y(i) = gv.value() + s(i);
      }
      FeasReport fr = epigraph_feasibility(ep, x, y, opts.feas_tol);
      if (!fr.feasible) return std::numeric_limits<double>::infinity();
      return epigraph_objective(ep, x, y).value();
    };
    SolveResult res = oracle_core(lifted, n + m, value_of, opts);
    if (res.status == SolveStatus::ToleranceReached) {
      // report the point in (x, y) coordinates
      Vector x = res.x.head(n), s = res.x.tail(m);
      Vector z(n + m);
      z.head(n) = x;
      for (int i = 0; i < m; ++i) {
        z(n + i) = eval(src.gauge.specs[i], src.gauge.gather(x, i)).value() + s(i);
      }
      res.x = z;
    }
    return res;
  }

  // General PHO form: grid (x, y) jointly over the affine set of [A B].
  Matrix AB(src.k(), n + m);
  if (src.k() > 0) {
    AB.leftCols(n) = src.A;
    AB.rightCols(m) = src.B;
  }
  AffineSet aff = affine_set(AB, src.b);
  auto value_of = [&](const Vector& z) -> double {
    Vector x = z.head(n), y = z.tail(m);
    FeasReport fr = epigraph_feasibility(ep, x, y, opts.feas_tol);
    if (!fr.feasible) return std::numeric_limits<double>::infinity();
    return epigraph_objective(ep, x, y).value();
  };
  return oracle_core(aff, n + m, value_of, opts);
}

SolveResult oracle_solve_convex(const ConvexProblem& pf,
                                const OracleOptions& opts) {
  AffineSet aff = affine_set(pf.A, pf.b);
  auto value_of = [&](const Vector& x) -> double {
    FeasReport fr = convex_feasibility(pf, x, opts.feas_tol);
    if (!fr.feasible) return std::numeric_limits<double>::infinity();
    return convex_objective(pf, x).value();
  };
  return oracle_core(aff, pf.n(), value_of, opts);
}

// ---------------------------------------------------------------------------
// Penalized projected subgradient on the dual.
// ---------------------------------------------------------------------------

namespace {

// Direction used by the explicit feasibility step when a block polar is
// infinite: a unit vector r in the block with alpha^T r > 0 certifying the
// divergence; stepping against its pullback shrinks alpha^T r.
Vector infinite_polar_direction(const GaugeSpec& g, const Vector& alpha) {
  if (const auto* cone = std::get_if<ConeIndicator>(&g.fn)) {
    if (cone->rep == ConeIndicator::Rep::Orthant) {
      Vector pos = alpha.cwiseMax(0.0);
      const double nrm = pos.norm();
      require(nrm > 0.0, ErrorCode::InvalidArgument,
              "orthant polar no longer infinite");
      return pos / nrm;
    }
    if (cone->rep == ConeIndicator::Rep::Halfspaces) {
      // distance direction to the polar cone spanned by the rows of M
      Vector proj = project_onto_generated_cone(cone->M, alpha);
      Vector diff = alpha - proj;
      const double nrm = diff.norm();
      if (nrm > 1e-12) return diff / nrm;
    }
    auto sup = detail::cone_support(*cone, alpha);
    require(sup.unbounded, ErrorCode::InvalidArgument,
            "cone polar no longer infinite");
    return sup.ray;
  }
  if (const auto* poly = std::get_if<PolyhedralGauge>(&g.fn)) {
    auto sup = detail::polyhedral_support(poly->generators, alpha);
    require(sup.unbounded, ErrorCode::InvalidArgument,
            "polyhedral polar no longer infinite");
    Vector r = sup.ray;
    return r / r.norm();
  }
  fail(ErrorCode::InvalidArgument,
       "infinite polar value on an unsupported gauge family");
}

// Support maximizer used for the penalty subgradient; falls back to the LP
// path for non-definite polyhedral gauges and to the origin when the polar
// vanishes.
Vector penalty_support_vector(const GaugeSpec& g, const Vector& alpha,
                              double polar_value) {
  if (polar_value <= kDefaultTol) return Vector::Zero(g.dim());
  if (vanishes_only_at_origin(g)) return support_argmax(g, alpha).x_bar;
  if (const auto* poly = std::get_if<PolyhedralGauge>(&g.fn)) {
    return detail::polyhedral_support(poly->generators, alpha).argmax;
  }
  return Vector::Zero(g.dim());
}

struct RunOutcome {
  bool valid = false;
  double merit = -std::numeric_limits<double>::infinity();
  double objective = 0.0;
  double max_violation = std::numeric_limits<double>::infinity();
  DualPoint pt;
};

RunOutcome subgradient_run(const Problem& prob, double rho, double step0,
                           int iters, int restart, unsigned long seed) {
  const int k = prob.k(), l = prob.l();
  Rng rng(seed * 0x51ed2701u + 977u * restart + 1u);
  Vector u = Vector::Zero(k), v = Vector::Zero(l);
  if (restart > 0) {
    const double scale = static_cast<double>(restart);
    u = rng.gaussian(k, scale);
    v = rng.gaussian(l, scale).cwiseMax(0.0);
  }

  RunOutcome best;
  for (int t = 0; t < iters; ++t) {
    DualPoint dp{u, v};
    DualSlack ds = dual_slack(prob, dp);

    bool has_infinite = false;
    Vector fs_u = Vector::Zero(k), fs_v = Vector::Zero(l);
    Vector grad_u = prob.b, grad_v = -prob.p;
    double max_violation = 0.0;

    for (int i = 0; i < prob.m(); ++i) {
      const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
      if (!ds.polar_values[i].is_finite()) {
        has_infinite = true;
        Vector r = infinite_polar_direction(prob.gauge.specs[i], alpha_i);
        Vector full = Vector::Zero(prob.n());
        prob.gauge.scatter_add(full, i, r);
        if (k > 0) fs_u += prob.A * full;
        if (l > 0) fs_v -= prob.H * full;
        continue;
      }
      const double viol = std::max(0.0, -ds.slack[i].value());
      max_violation = std::max(max_violation, viol);
      if (viol > 0.0) {
        Vector xb = penalty_support_vector(prob.gauge.specs[i], alpha_i,
                                           ds.polar_values[i].value());
        Vector full = Vector::Zero(prob.n());
        prob.gauge.scatter_add(full, i, xb);
        if (k > 0) grad_u -= rho * (prob.A * full + prob.B.col(i));
        if (l > 0) grad_v -= rho * (-(prob.H * full) - prob.K.col(i));
      }
    }

    const double step = step0 / (1.0 + t);
    if (has_infinite) {
      // explicit feasibility step toward the polar domain
      u -= step * fs_u;
      v = (v - step * fs_v).cwiseMax(0.0);
      continue;
    }

    double viol_sum = 0.0;
    for (int i = 0; i < prob.m(); ++i)
      viol_sum += std::max(0.0, -ds.slack[i].value());
    const double obj = dual_objective(prob, dp);
    const double merit = obj - rho * viol_sum;
    if (merit > best.merit) {
      best.valid = true;
      best.merit = merit;
      best.objective = obj;
      best.max_violation = max_violation;
      best.pt = dp;
    }

    u += step * grad_u;
    v = (v + step * grad_v).cwiseMax(0.0);
  }
  return best;
}

}  // namespace

SolveResult solve_dual_subgradient(const Problem& prob,
                                   const SubgradientOptions& opts) {
  require(prob.is_convex(), ErrorCode::InvalidArgument,
          "subgradient solver requires the convex form (d >= 0, K >= 0)");
  const double rho =
      opts.rho > 0.0
          ? opts.rho
          : 10.0 * (1.0 + (prob.m() > 0 ? inf_norm(prob.d) : 0.0) +
                    (prob.k() > 0 ? inf_norm(prob.b) : 0.0));
  const double step0 = opts.step > 0.0 ? opts.step : 1.0 / rho;
  const int restarts = std::max(1, opts.restarts);

  std::vector<RunOutcome> outcomes(restarts);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
#endif
  for (int r = 0; r < restarts; ++r) {
    outcomes[r] = subgradient_run(prob, rho, step0, opts.iters, r, opts.seed);
  }

  // deterministic merge: best merit, ties to the lowest restart index
  int winner = -1;
  for (int r = 0; r < restarts; ++r) {
    if (!outcomes[r].valid) continue;
    if (winner < 0 || outcomes[r].merit > outcomes[winner].merit) winner = r;
  }
  require(winner >= 0, ErrorCode::PenaltyTooSmall,
          "no penalized iterate was evaluated; increase rho or iterations");
  const RunOutcome& w = outcomes[winner];
  if (w.max_violation > opts.feas_tol) {
    fail(ErrorCode::PenaltyTooSmall,
         "best iterate violates the dual constraints by " +
             std::to_string(w.max_violation) + "; increase rho");
  }

  SolveResult res;
  res.status = SolveStatus::ToleranceReached;
  res.dual = w.pt;
  res.objective = w.objective;
  res.iterations = opts.iters * restarts;
  res.accuracy = step0 * (1.0 + rho) / (1.0 + opts.iters);
  return res;
}

// ---------------------------------------------------------------------------
// Cutting-plane refinement (outer linearization of the polar constraints).
// ---------------------------------------------------------------------------

namespace {

struct Cut {
  Vector g;      // over stacked (u, v)
  double rhs;
  bool permanent;
};

Vector stack_uv(const Vector& u, const Vector& v) {
  Vector z(u.size() + v.size());
  z.head(u.size()) = u;
  z.tail(v.size()) = v;
  return z;
}

// The cutting planes stop on the constraint-violation scale, which still
// leaves an O(sqrt(violation)) tangential displacement along curved polar
// surfaces, and the support selections can need interior face points (l1
// ties, weak l-inf coordinates). This Gauss-Newton pass solves the full
// active KKT system with the face parameters as unknowns:
//   sum_i A_i y_i = b,              y_i = lambda_i x_bar_i on the face,
//   slack_i(u,v) = 0                (active blocks),
//   [p - H y - K lambda]_r = 0      (rows with v_r > 0),
//   alpha_j(u,v) = 0                (weak l-inf coordinates),
//   score_t(u,v) = score_t0(u,v)    (l1 ties),
// which is square and smooth, so the iteration reaches ~1e-12 residuals.
DualPoint kkt_newton_refine(const Problem& prob, DualPoint dp, int rounds) {
  const int k = prob.k(), l = prob.l();
  DualKKTPoint kkt0 = extract_kkt(prob, dp, 1e-5);
  DualSlack ds0 = dual_slack(prob, dp);

  std::vector<int> act_rows;
  for (int r = 0; r < l; ++r) {
    if (dp.v(r) > 1e-8) act_rows.push_back(r);
  }
  const int nR = static_cast<int>(act_rows.size());

  // Per-block face structure, classified once at the warm point.
  enum class Kind { Inactive, Singleton, LInf, L1 };
  struct Face {
    Kind kind = Kind::Inactive;
    Vector fixed;                      // l-inf: strong signs (scaled)
    std::vector<int> weak;             // l-inf: weak block coordinates
    std::vector<int> tied;             // l1: tied block coordinates
    std::vector<double> tie_dir;       // l1: signed unit coordinate scale
    Vector inv_w;                      // coordinate scales (1 or 1/w_j)
    int var_off = 0;                   // first variable of this block
    int n_vars = 0;
  };
  const double face_tol = 1e-5;
  std::vector<Face> faces(prob.m());
  int nvar = k + nR;
  int n_extra_eqs = 0;
  int n_active = 0;
  for (int i = 0; i < prob.m(); ++i) {
    Face& f = faces[i];
    if (kkt0.lambda(i) <= 1e-8 &&
        ds0.slack[i].value() > face_tol * (1.0 + std::abs(prob.d(i)))) {
      continue;
    }
    const GaugeSpec& g = prob.gauge.specs[i];
    const Vector alpha_i = prob.gauge.gather(ds0.alpha, i);
    const int ni = g.dim();
    double p_exp = 0.0;
    Vector inv_w = Vector::Ones(ni);
    if (const auto* pn = std::get_if<PNorm>(&g.fn)) {
      p_exp = pn->p;
    } else if (const auto* wp = std::get_if<WeightedPNorm>(&g.fn)) {
      p_exp = wp->p;
      inv_w = wp->w.cwiseInverse();
    } else {
      p_exp = 2.0;  // treated as a smooth singleton selection
    }
    f.inv_w = inv_w;
    ++n_active;
    f.var_off = nvar;
    if (p_exp == kInfExponent) {
      f.kind = Kind::LInf;
      f.fixed = Vector::Zero(ni);
      const double scale = 1.0 + alpha_i.cwiseAbs().maxCoeff();
      for (int j = 0; j < ni; ++j) {
        if (std::abs(alpha_i(j)) > face_tol * scale) {
          f.fixed(j) = (alpha_i(j) >= 0.0 ? 1.0 : -1.0) * inv_w(j);
        } else {
          f.weak.push_back(j);
        }
      }
      f.n_vars = 1 + static_cast<int>(f.weak.size());  // lambda + weak ys
      n_extra_eqs += static_cast<int>(f.weak.size());  // alpha_j = 0
    } else if (p_exp == 1.0) {
      f.kind = Kind::L1;
      Vector score = alpha_i.cwiseAbs().cwiseProduct(inv_w);
      const double top = score.maxCoeff();
      for (int j = 0; j < ni; ++j) {
        if (score(j) >= top - face_tol * (1.0 + top)) {
          f.tied.push_back(j);
          f.tie_dir.push_back((alpha_i(j) >= 0.0 ? 1.0 : -1.0) * inv_w(j));
        }
      }
      f.n_vars = static_cast<int>(f.tied.size());      // weights, lambda = sum
      n_extra_eqs += static_cast<int>(f.tied.size()) - 1;
    } else {
      f.kind = Kind::Singleton;
      f.n_vars = 1;  // lambda
    }
    nvar += f.n_vars;
  }
  if (n_active == 0) return dp;

  const int neq = k + n_active + nR + n_extra_eqs;

  auto unpack_uv = [&](const Vector& z) {
    DualPoint out = dp;
    out.u = z.head(k);
    for (int t = 0; t < nR; ++t) out.v(act_rows[t]) = z(k + t);
    return out;
  };
  auto block_lambda = [&](const Face& f, const Vector& z) -> double {
    if (f.kind == Kind::L1) {
      double s = 0.0;
      for (int q = 0; q < f.n_vars; ++q) s += z(f.var_off + q);
      return s;
    }
    return z(f.var_off);
  };
  auto block_y = [&](const Face& f, const Vector& z,
                     const Vector& alpha_i, const GaugeSpec& g) -> Vector {
    switch (f.kind) {
      case Kind::Singleton: {
        ExtReal pol = eval_polar(g, alpha_i);
        if (!pol.is_finite()) return Vector::Zero(g.dim());
        return z(f.var_off) * penalty_support_vector(g, alpha_i, pol.value());
      }
      case Kind::LInf: {
        Vector y = z(f.var_off) * f.fixed;
        for (size_t t = 0; t < f.weak.size(); ++t) {
          y(f.weak[t]) += z(f.var_off + 1 + t);
        }
        return y;
      }
      case Kind::L1: {
        Vector y = Vector::Zero(g.dim());
        for (size_t t = 0; t < f.tied.size(); ++t) {
          y(f.tied[t]) += f.tie_dir[t] * z(f.var_off + static_cast<int>(t));
        }
        return y;
      }
      case Kind::Inactive: break;
    }
    return Vector::Zero(g.dim());
  };

  auto residual = [&](const Vector& z) -> Vector {
    DualPoint at = unpack_uv(z);
    DualSlack ds = dual_slack(prob, at);
    Vector R = Vector::Zero(neq);
    Vector y_full = Vector::Zero(prob.n());
    Vector lambda = Vector::Zero(prob.m());
    int row = k;
    for (int i = 0; i < prob.m(); ++i) {
      const Face& f = faces[i];
      if (f.kind == Kind::Inactive) continue;
      if (!ds.polar_values[i].is_finite()) return Vector::Constant(neq, 1e6);
      const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
      lambda(i) = block_lambda(f, z);
      prob.gauge.scatter_add(y_full, i,
                             block_y(f, z, alpha_i, prob.gauge.specs[i]));
      R(row++) = ds.slack[i].value();
    }
    if (k > 0) R.head(k) = prob.A * y_full - prob.b;
    for (int t = 0; t < nR; ++t) {
      const int r = act_rows[t];
      R(row++) = prob.p(r) - prob.H.row(r).dot(y_full) -
                 prob.K.row(r).dot(lambda);
    }
    for (int i = 0; i < prob.m(); ++i) {
      const Face& f = faces[i];
      const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
      if (f.kind == Kind::LInf) {
        for (int j : f.weak) R(row++) = alpha_i(j);
      } else if (f.kind == Kind::L1) {
        for (size_t t = 1; t < f.tied.size(); ++t) {
          R(row++) = std::abs(alpha_i(f.tied[t])) * f.inv_w(f.tied[t]) -
                     std::abs(alpha_i(f.tied[0])) * f.inv_w(f.tied[0]);
        }
      }
    }
    return R;
  };

  // initial variable vector from the warm extraction
  Vector z = Vector::Zero(nvar);
  z.head(k) = dp.u;
  for (int t = 0; t < nR; ++t) z(k + t) = dp.v(act_rows[t]);
  for (int i = 0; i < prob.m(); ++i) {
    const Face& f = faces[i];
    if (f.kind == Kind::Inactive) continue;
    const double li = kkt0.lambda(i);
    const Vector& xb = (*kkt0.x_bar_blocks)[i];
    switch (f.kind) {
      case Kind::Singleton:
        z(f.var_off) = li;
        break;
      case Kind::LInf:
        z(f.var_off) = li;
        for (size_t t = 0; t < f.weak.size(); ++t) {
          z(f.var_off + 1 + t) = li * xb(f.weak[t]);
        }
        break;
      case Kind::L1:
        for (size_t t = 0; t < f.tied.size(); ++t) {
          const int j = f.tied[t];
          z(f.var_off + static_cast<int>(t)) =
              std::max(0.0, li * xb(j) / f.tie_dir[t]);
        }
        break;
      case Kind::Inactive:
        break;
    }
  }

  Vector best_z = z;
  double best_norm = inf_norm(residual(z));
  for (int round = 0; round < rounds; ++round) {
    Vector R0 = residual(z);
    if (inf_norm(R0) < 1e-12) break;
    const double h = 1e-7;
    Matrix J(neq, nvar);
    for (int c = 0; c < nvar; ++c) {
      Vector zp = z, zm = z;
      zp(c) += h;
      zm(c) -= h;
      J.col(c) = (residual(zp) - residual(zm)) / (2.0 * h);
    }
    Vector step = least_squares(J, -R0);
    bool accepted = false;
    for (double damp : {1.0, 0.5, 0.25, 0.125}) {
      Vector z1 = z + damp * step;
      bool guards_ok = true;
      for (int t = 0; t < nR && guards_ok; ++t) {
        if (z1(k + t) < 0.0) guards_ok = false;
      }
      for (int i = 0; i < prob.m() && guards_ok; ++i) {
        const Face& f = faces[i];
        if (f.kind == Kind::Inactive) continue;
        const double li = block_lambda(f, z1);
        if (li < 0.0) guards_ok = false;
        if (f.kind == Kind::L1) {
          for (int q = 0; q < f.n_vars; ++q) {
            if (z1(f.var_off + q) < -1e-12) guards_ok = false;
          }
        }
        if (f.kind == Kind::LInf) {
          for (size_t t = 0; t < f.weak.size(); ++t) {
            const double bound = li * f.inv_w(f.weak[t]) * (1.0 + 1e-9);
            if (std::abs(z1(f.var_off + 1 + t)) > bound) guards_ok = false;
          }
        }
      }
      if (!guards_ok) continue;
      const double nrm = inf_norm(residual(z1));
      if (nrm < best_norm) {
        z = z1;
        best_z = z1;
        best_norm = nrm;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  DualPoint refined = unpack_uv(best_z);
  return dual_feasible(prob, refined, 1e-7) ? refined : dp;
}

}  // namespace

SolveResult polish_dual(const Problem& prob, const DualPoint& warm,
                        const PolishOptions& opts) {
  const int k = prob.k(), l = prob.l(), dim = k + l;
  for (int i = 0; i < prob.m(); ++i) {
    require(!std::holds_alternative<PerspectiveWrap>(prob.gauge.specs[i].fn),
            ErrorCode::InvalidArgument,
            "polish_dual does not support perspective blocks");
  }

  Vector cost = Vector::Zero(dim);  // minimize -b^T u + p^T v
  cost.head(k) = -prob.b;
  cost.tail(l) = prob.p;

  // alpha_j as an affine function of (u, v): alpha_j = g_j^T (u, v) - c_j
  auto alpha_row = [&](int j) {
    Vector g = Vector::Zero(dim);
    if (k > 0) g.head(k) = prob.A.col(j);
    if (l > 0) g.tail(l) = -prob.H.col(j);
    return g;
  };

  std::vector<Cut> cuts;
  // sign rows v >= 0
  for (int i = 0; i < l; ++i) {
    Vector g = Vector::Zero(dim);
    g(k + i) = -1.0;
    cuts.push_back({g, 0.0, true});
  }
  // cone blocks contribute exact linear rows: the polar vanishes on its
  // domain, so the value constraint is linear, and orthant / generated
  // domains are halfspace sets in alpha.
  for (int i = 0; i < prob.m(); ++i) {
    const auto* cone = std::get_if<ConeIndicator>(&prob.gauge.specs[i].fn);
    if (!cone) continue;
    Vector g = Vector::Zero(dim);
    if (k > 0) g.head(k) = prob.B.col(i);
    if (l > 0) g.tail(l) -= prob.K.col(i);
    cuts.push_back({g, prob.d(i), true});
    const auto& blk = prob.gauge.partition.blocks[i];
    if (cone->rep == ConeIndicator::Rep::Orthant) {
      for (int j : blk) cuts.push_back({alpha_row(j), prob.c(j), true});
    } else if (cone->rep == ConeIndicator::Rep::Generated) {
      // dom of the polar: M alpha_block <= 0
      for (int r = 0; r < cone->M.rows(); ++r) {
        Vector g2 = Vector::Zero(dim);
        double rhs = 0.0;
        for (size_t t = 0; t < blk.size(); ++t) {
          g2 += cone->M(r, t) * alpha_row(blk[t]);
          rhs += cone->M(r, t) * prob.c(blk[t]);
        }
        cuts.push_back({g2, rhs, true});
      }
    }
  }

  double box = std::max(10.0, 10.0 * (1.0 + std::max(inf_norm(warm.u),
                                                     inf_norm(warm.v))));
  SolveResult res;
  res.status = SolveStatus::IterLimit;
  bool have_best = false;
  DualPoint best_pt = warm;
  double best_obj = -std::numeric_limits<double>::infinity();

  Matrix no_eq(0, dim);
  Vector no_rhs(0);

  for (int round = 0; round < opts.max_rounds; ++round) {
    ++res.iterations;
    const int nrows = static_cast<int>(cuts.size()) + 2 * dim;
    Matrix A_ub(nrows, dim);
    Vector b_ub(nrows);
    for (size_t i = 0; i < cuts.size(); ++i) {
      A_ub.row(i) = cuts[i].g.transpose();
      b_ub(i) = cuts[i].rhs;
    }
    for (int i = 0; i < dim; ++i) {
      A_ub.row(cuts.size() + 2 * i).setZero();
      A_ub(cuts.size() + 2 * i, i) = 1.0;
      b_ub(cuts.size() + 2 * i) = box;
      A_ub.row(cuts.size() + 2 * i + 1).setZero();
      A_ub(cuts.size() + 2 * i + 1, i) = -1.0;
      b_ub(cuts.size() + 2 * i + 1) = box;
    }

    LpResult lp = lp_solve(cost, no_eq, no_rhs, A_ub, b_ub);
    if (lp.status == LpStatus::Infeasible) {
      res.status = SolveStatus::Infeasible;
      break;
    }
    if (lp.status != LpStatus::Optimal) break;

    DualPoint dp{lp.x.head(k), lp.x.tail(l)};
    const bool on_box = inf_norm(lp.x) >= box - 1e-6;

    DualSlack ds = dual_slack(prob, dp);
    double violation = 0.0;
    for (int i = 0; i < prob.m(); ++i) {
      violation = std::max(
          violation, ds.slack[i].is_finite()
                         ? std::max(0.0, -ds.slack[i].value())
                         : std::numeric_limits<double>::infinity());
    }

    if (violation <= opts.violation_tol) {
      if (!on_box) {
        dp = kkt_newton_refine(prob, dp, 12);
        res.status = SolveStatus::ToleranceReached;
        res.dual = dp;
        res.objective = dual_objective(prob, dp);
        res.accuracy = violation;
        return res;
      }
      // feasible but clamped by the box: nothing to cut, only room to grow
      have_best = true;
      best_obj = dual_objective(prob, dp);
      best_pt = dp;
      box *= 10.0;
      if (box > 1e9) break;
      continue;
    }
    if (violation <= 1e-7) {
      const double obj = dual_objective(prob, dp);
      if (!have_best || obj > best_obj) {
        have_best = true;
        best_obj = obj;
        best_pt = dp;
      }
    }
    // cuts generated at a clamped point are still valid; grow the box too
    if (on_box) box = std::min(1e9, 4.0 * box);

    // one cut per violated block
    const Vector zhat = stack_uv(dp.u, dp.v);
    for (int i = 0; i < prob.m(); ++i) {
      const Vector alpha_i = prob.gauge.gather(ds.alpha, i);
      const GaugeSpec& gi = prob.gauge.specs[i];
      if (std::holds_alternative<ConeIndicator>(gi.fn)) {
        if (!ds.polar_values[i].is_finite()) {
          // halfspace-represented cones get on-demand domain cuts
          auto sup = detail::cone_support(std::get<ConeIndicator>(gi.fn), alpha_i);
          if (!sup.unbounded) continue;
          Vector g = Vector::Zero(dim);
          double rhs = 0.0;
          const auto& blk = prob.gauge.partition.blocks[i];
          for (size_t t = 0; t < blk.size(); ++t) {
            g += sup.ray(t) * alpha_row(blk[t]);
            rhs += sup.ray(t) * prob.c(blk[t]);
          }
          cuts.push_back({g, rhs, false});
        }
        continue;
      }
      if (!ds.polar_values[i].is_finite()) {
        const auto* poly = std::get_if<PolyhedralGauge>(&gi.fn);
        require(poly != nullptr, ErrorCode::InvalidArgument,
                "unexpected infinite polar during polishing");
        auto sup = detail::polyhedral_support(poly->generators, alpha_i);
        Vector g = Vector::Zero(dim);
        double rhs = 0.0;
        const auto& blk = prob.gauge.partition.blocks[i];
        for (size_t t = 0; t < blk.size(); ++t) {
          g += sup.ray(t) * alpha_row(blk[t]);
          rhs += sup.ray(t) * prob.c(blk[t]);
        }
        cuts.push_back({g, rhs, false});
        continue;
      }
      if (ds.slack[i].value() >= -opts.violation_tol) continue;
      Vector xb = penalty_support_vector(gi, alpha_i, ds.polar_values[i].value());
      Vector full = Vector::Zero(prob.n());
      prob.gauge.scatter_add(full, i, xb);
      Vector g = Vector::Zero(dim);
      if (k > 0) g.head(k) = prob.A * full + prob.B.col(i);
      if (l > 0) g.tail(l) = -(prob.H * full) - prob.K.col(i);
      const double ci = ds.polar_values[i].value() - ds.beta(i);  // violation
      cuts.push_back({g, g.dot(zhat) - ci, false});
    }

    // cut management: drop slack dynamic cuts once the pool grows
    if (static_cast<int>(cuts.size()) > opts.kept_cuts) {
      std::vector<Cut> kept;
      for (const Cut& cut : cuts) {
        if (cut.permanent || cut.g.dot(zhat) >= cut.rhs - 1e-6) kept.push_back(cut);
      }
      if (static_cast<int>(kept.size()) < static_cast<int>(cuts.size())) {
        cuts = std::move(kept);
      }
    }
  }

  if (have_best) {
    best_pt = kkt_newton_refine(prob, best_pt, 12);
    res.status = SolveStatus::ToleranceReached;
    res.dual = best_pt;
    res.objective = dual_objective(prob, best_pt);
    res.accuracy = 1e-7;
  } else if (res.status != SolveStatus::Infeasible) {
    res.status = SolveStatus::IterLimit;
    res.dual = warm;
    res.objective = dual_objective(prob, warm);
  }
  return res;
}

namespace {

// Parameterization of the scaled support face lambda * X_i(u, v):
//   y = fixed * lambda + cols * w,  w >= 0,
// where either lambda is its own variable, or (p = 1 faces) lambda = sum(w).
// `bounded_pairs` lists (w+, w-) column pairs with w+ + w- <= lambda, which
// encode the free coordinates of an l-inf face.
struct BlockFace {
  Vector fixed;
  Matrix cols;
  bool lambda_is_sum_w = false;
  std::vector<std::pair<int, int>> bounded_pairs;
};

BlockFace singleton_face(const Vector& x_bar) {
  BlockFace f;
  f.fixed = x_bar;
  f.cols = Matrix(x_bar.size(), 0);
  return f;
}

BlockFace block_face(const GaugeSpec& g, const Vector& alpha, double polar_value,
                     double tie_tol) {
  const int n = g.dim();
  if (const auto* pn = std::get_if<PNorm>(&g.fn)) {
    if (pn->p == 1.0) {
      const double top = alpha.cwiseAbs().maxCoeff();
      std::vector<int> tied;
      for (int j = 0; j < n; ++j) {
        if (std::abs(alpha(j)) >= top - tie_tol * (1.0 + top)) tied.push_back(j);
      }
      BlockFace f;
      f.fixed = Vector::Zero(n);
      f.cols = Matrix::Zero(n, tied.size());
      for (size_t c = 0; c < tied.size(); ++c) {
        f.cols(tied[c], c) = alpha(tied[c]) >= 0.0 ? 1.0 : -1.0;
      }
      f.lambda_is_sum_w = true;
      return f;
    }
    if (pn->p == kInfExponent) {
      BlockFace f;
      f.fixed = Vector::Zero(n);
      std::vector<int> weak;
      const double scale = 1.0 + alpha.cwiseAbs().maxCoeff();
      for (int j = 0; j < n; ++j) {
        if (std::abs(alpha(j)) > tie_tol * scale) {
          f.fixed(j) = alpha(j) >= 0.0 ? 1.0 : -1.0;
        } else {
          weak.push_back(j);
        }
      }
      f.cols = Matrix::Zero(n, 2 * weak.size());
      for (size_t c = 0; c < weak.size(); ++c) {
        f.cols(weak[c], 2 * c) = 1.0;
        f.cols(weak[c], 2 * c + 1) = -1.0;
        f.bounded_pairs.push_back({static_cast<int>(2 * c),
                                   static_cast<int>(2 * c + 1)});
      }
      return f;
    }
    return singleton_face(support_argmax(g, alpha).x_bar);
  }
  if (const auto* wp = std::get_if<WeightedPNorm>(&g.fn)) {
    if (wp->p == 1.0) {
      Vector score = alpha.cwiseAbs().cwiseQuotient(wp->w);
      const double top = score.maxCoeff();
      std::vector<int> tied;
      for (int j = 0; j < n; ++j) {
        if (score(j) >= top - tie_tol * (1.0 + top)) tied.push_back(j);
      }
      BlockFace f;
      f.fixed = Vector::Zero(n);
      f.cols = Matrix::Zero(n, tied.size());
      for (size_t c = 0; c < tied.size(); ++c) {
        const int j = tied[c];
        f.cols(j, c) = (alpha(j) >= 0.0 ? 1.0 : -1.0) / wp->w(j);
      }
      f.lambda_is_sum_w = true;
      return f;
    }
    if (wp->p == kInfExponent) {
      BlockFace f;
      f.fixed = Vector::Zero(n);
      std::vector<int> weak;
      const double scale = 1.0 + alpha.cwiseAbs().maxCoeff();
      for (int j = 0; j < n; ++j) {
        if (std::abs(alpha(j)) > tie_tol * scale) {
          f.fixed(j) = (alpha(j) >= 0.0 ? 1.0 : -1.0) / wp->w(j);
        } else {
          weak.push_back(j);
        }
      }
      f.cols = Matrix::Zero(n, 2 * weak.size());
      for (size_t c = 0; c < weak.size(); ++c) {
        const int j = weak[c];
        f.cols(j, 2 * c) = 1.0 / wp->w(j);
        f.cols(j, 2 * c + 1) = -1.0 / wp->w(j);
        f.bounded_pairs.push_back({static_cast<int>(2 * c),
                                   static_cast<int>(2 * c + 1)});
      }
      return f;
    }
    return singleton_face(support_argmax(g, alpha).x_bar);
  }
  if (const auto* sc = std::get_if<ScaledGauge>(&g.fn)) {
    BlockFace f = block_face(*sc->inner, alpha,
                             polar_value * sc->factor, tie_tol);
    f.fixed /= sc->factor;
    f.cols /= sc->factor;
    return f;
  }
  return singleton_face(penalty_support_vector(g, alpha, polar_value));
}

}  // namespace

DualKKTPoint extract_kkt(const Problem& prob, const DualPoint& dp,
                         double active_tol) {
  DualSlack ds = dual_slack(prob, dp);
  const int m = prob.m(), k = prob.k(), l = prob.l();
  for (int i = 0; i < m; ++i) {
    require(ds.polar_values[i].is_finite(), ErrorCode::InvalidArgument,
            "extract_kkt requires finite polar values (near-feasible point)");
  }

  std::vector<int> active;
  for (int i = 0; i < m; ++i) {
    if (ds.slack[i].value() <= active_tol * (1.0 + std::abs(prob.d(i)))) {
      active.push_back(i);
    }
  }
  std::vector<int> v_pos;
  for (int j = 0; j < l; ++j) {
    if (dp.v(j) > active_tol) v_pos.push_back(j);
  }

  DualKKTPoint kkt;
  kkt.u = dp.u;
  kkt.v = dp.v;
  kkt.lambda = Vector::Zero(m);
  std::vector<Vector> x_bars(m);
  for (int i = 0; i < m; ++i) {
    x_bars[i] = penalty_support_vector(prob.gauge.specs[i],
                                       prob.gauge.gather(ds.alpha, i),
                                       ds.polar_values[i].value());
  }

  // Stationarity may need a point inside the optimal face rather than the
  // deterministic vertex (l1 ties, zero components under l-inf), so lambda
  // and the scaled supports y_i = lambda_i x_bar_i solve a small LP over the
  // face parameterizations.
  if (!active.empty()) {
    std::vector<BlockFace> faces;
    std::vector<int> lambda_col(active.size(), -1), w_off(active.size(), 0);
    int nvars = 0;
    for (size_t c = 0; c < active.size(); ++c) {
      const int i = active[c];
      faces.push_back(block_face(prob.gauge.specs[i],
                                 prob.gauge.gather(ds.alpha, i),
                                 ds.polar_values[i].value(), 1e-7));
      if (!faces[c].lambda_is_sum_w) lambda_col[c] = nvars++;
      w_off[c] = nvars;
      nvars += static_cast<int>(faces[c].cols.cols());
    }

    // lambda_i as a linear functional of the variables
    auto lambda_row = [&](size_t c) {
      Vector row = Vector::Zero(nvars);
      if (faces[c].lambda_is_sum_w) {
        for (int q = 0; q < faces[c].cols.cols(); ++q) row(w_off[c] + q) = 1.0;
      } else {
        row(lambda_col[c]) = 1.0;
      }
      return row;
    };
    // contribution of block c to a linear functional t^T y_full
    auto add_y_terms = [&](size_t c, const Vector& t_block, Vector& row) {
      if (!faces[c].lambda_is_sum_w) {
        row(lambda_col[c]) += t_block.dot(faces[c].fixed);
      }
      for (int q = 0; q < faces[c].cols.cols(); ++q) {
        row(w_off[c] + q) += t_block.dot(faces[c].cols.col(q));
      }
    };

    const int eq_rows = k + static_cast<int>(v_pos.size());
    Matrix A_eq = Matrix::Zero(eq_rows, nvars);
    Vector b_eq(eq_rows);
    for (int r = 0; r < k; ++r) {
      Vector row = Vector::Zero(nvars);
      for (size_t c = 0; c < active.size(); ++c) {
        const int i = active[c];
        const auto& blk = prob.gauge.partition.blocks[i];
        Vector t_block(blk.size());
        for (size_t t = 0; t < blk.size(); ++t) t_block(t) = prob.A(r, blk[t]);
        add_y_terms(c, t_block, row);
      }
      A_eq.row(r) = row.transpose();
      b_eq(r) = prob.b(r);
    }
    for (size_t s = 0; s < v_pos.size(); ++s) {
      const int r = v_pos[s];
      Vector row = Vector::Zero(nvars);
      for (size_t c = 0; c < active.size(); ++c) {
        const int i = active[c];
        const auto& blk = prob.gauge.partition.blocks[i];
        Vector t_block(blk.size());
        for (size_t t = 0; t < blk.size(); ++t) t_block(t) = prob.H(r, blk[t]);
        add_y_terms(c, t_block, row);
        row += prob.K(r, i) * lambda_row(c);
      }
      A_eq.row(k + s) = row.transpose();
      b_eq(k + s) = prob.p(r);
    }

    std::vector<Vector> ub_rows;
    std::vector<double> ub_rhs;
    for (int v = 0; v < nvars; ++v) {
      Vector row = Vector::Zero(nvars);
      row(v) = -1.0;
      ub_rows.push_back(row);
      ub_rhs.push_back(0.0);
    }
    for (size_t c = 0; c < active.size(); ++c) {
      for (const auto& [wp, wm] : faces[c].bounded_pairs) {
        Vector row = -lambda_row(c);
        row(w_off[c] + wp) += 1.0;
        row(w_off[c] + wm) += 1.0;
        ub_rows.push_back(row);
        ub_rhs.push_back(0.0);
      }
    }
    Matrix A_ub(ub_rows.size(), nvars);
    Vector b_ub(ub_rows.size());
    for (size_t r = 0; r < ub_rows.size(); ++r) {
      A_ub.row(r) = ub_rows[r].transpose();
      b_ub(r) = ub_rhs[r];
    }

    Vector cost = Vector::Zero(nvars);
    for (size_t c = 0; c < active.size(); ++c) cost += lambda_row(c);

    LpResult lp = lp_solve(cost, A_eq, b_eq, A_ub, b_ub);
    if (lp.status == LpStatus::Optimal) {
      for (size_t c = 0; c < active.size(); ++c) {
        const int i = active[c];
        const double li = lambda_row(c).dot(lp.x);
        kkt.lambda(i) = std::max(0.0, li);
        if (li > 1e-9) {
          Vector y = faces[c].lambda_is_sum_w
                         ? Vector(Vector::Zero(faces[c].fixed.size()))
                         : Vector(faces[c].fixed * lp.x(lambda_col[c]));
          for (int q = 0; q < faces[c].cols.cols(); ++q) {
            y += lp.x(w_off[c] + q) * faces[c].cols.col(q);
          }
          x_bars[i] = y / li;
        }
      }
    } else {
      // fall back to nonnegative least squares on the vertex realizations
      Matrix U = Matrix::Zero(m, k), V = Matrix::Zero(m, l);
      for (int i = 0; i < m; ++i) {
        Vector full = Vector::Zero(prob.n());
        prob.gauge.scatter_add(full, i, x_bars[i]);
        if (k > 0) U.row(i) = (prob.A * full).transpose();
        if (l > 0) V.row(i) = -(prob.H * full).transpose();
      }
      const int rows = k + static_cast<int>(v_pos.size());
      Matrix M(rows, active.size());
      Vector rhs(rows);
      for (size_t c = 0; c < active.size(); ++c) {
        const int i = active[c];
        for (int r = 0; r < k; ++r) M(r, c) = U(i, r);
        for (size_t t = 0; t < v_pos.size(); ++t) {
          const int j = v_pos[t];
          M(k + t, c) = V(i, j) - prob.K(j, i);
        }
      }
      rhs.head(k) = prob.b;
      for (size_t t = 0; t < v_pos.size(); ++t) rhs(k + t) = -prob.p(v_pos[t]);
      Vector lam_active = nnls(M, rhs);
      for (size_t c = 0; c < active.size(); ++c) {
        kkt.lambda(active[c]) = lam_active(c);
      }
    }
  }

  Vector mu = Vector::Zero(l);
  if (l > 0) {
    Vector y_full = Vector::Zero(prob.n());
    for (int i = 0; i < m; ++i) {
      prob.gauge.scatter_add(y_full, i, kkt.lambda(i) * x_bars[i]);
    }
    mu = (prob.p - prob.H * y_full - prob.K * kkt.lambda).cwiseMax(0.0);
  }
  kkt.mu = mu;
  kkt.x_bar_blocks = std::move(x_bars);
  return kkt;
}

SolveResult solve_lp(const Vector& c, const Matrix& A_eq, const Vector& b_eq,
                     const Matrix& A_ub, const Vector& b_ub) {
  require(c.size() <= 50, ErrorCode::DimensionTooLarge,
          "solve_lp targets small dense instances (<= 50 variables)");
  LpResult lp = lp_solve(c, A_eq, b_eq, A_ub, b_ub);
  SolveResult res;
  res.iterations = lp.iterations;
  switch (lp.status) {
    case LpStatus::Optimal:
      res.status = SolveStatus::ToleranceReached;
      res.x = lp.x;
      res.objective = lp.objective;
      res.dual = DualPoint{lp.dual_eq, lp.dual_ub};
      res.accuracy = 1e-9;
      break;
    case LpStatus::Infeasible:
      res.status = SolveStatus::Infeasible;
      break;
    case LpStatus::Unbounded:
      res.status = SolveStatus::Unbounded;
      res.x = lp.ray;
      break;
    case LpStatus::IterLimit:
      res.status = SolveStatus::IterLimit;
      break;
  }
  return res;
}

std::optional<Vector> find_slater_point(const Problem& prob, double margin,
                                        int samples, unsigned long seed) {
  AffineSet aff = affine_set(prob.A, prob.b);
  if (!aff.consistent(1e-8)) return std::nullopt;
  const int free_d = prob.n() - aff.rank;
  Rng rng(seed);

  auto strictly_ok = [&](const Vector& x) -> bool {
    PrimalPoint pt = make_primal_point(prob, x);
    if (!pt.in_domain()) return false;
    // strict interiority for cone-indicator blocks
    for (int i = 0; i < prob.m(); ++i) {
      const auto* cone = std::get_if<ConeIndicator>(&prob.gauge.specs[i].fn);
      if (!cone) continue;
      Vector xi = prob.gauge.gather(x, i);
      if (cone->rep == ConeIndicator::Rep::Orthant) {
        if (xi.minCoeff() < margin) return false;
      } else if (cone->rep == ConeIndicator::Rep::Halfspaces) {
        if ((cone->M * xi).maxCoeff() > -margin) return false;
      }
    }
    if (prob.l() > 0) {
      Vector gv(prob.m());
      for (int i = 0; i < prob.m(); ++i) gv(i) = pt.gauge_values[i].value();
      Vector slack = prob.p - prob.H * x - prob.K * gv;
      if (slack.minCoeff() < margin) return false;
    }
    return true;
  };

  if (strictly_ok(aff.particular)) return aff.particular;
  for (int s = 0; s < samples; ++s) {
    const double radius = 0.25 * (1.0 + s / 64.0);
    Vector x = aff.particular;
    if (free_d > 0) x += aff.nullspace * rng.gaussian(free_d, radius);
    if (strictly_ok(x)) return x;
  }
  return std::nullopt;
}

}  // namespace gaugekit
