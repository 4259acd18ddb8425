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

#include "gaugekit/perspective.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/errors.hpp"
#include "gaugekit/lp.hpp"

namespace gaugekit {

namespace {

constexpr double kPerspectiveDomainTol = 1e-9;
constexpr double kRecessionNullTol = 1e-10;

void check_dim(const ConvexSpec& f, const Vector& x, const char* who) {
  require(static_cast<int>(x.size()) == f.dim(), ErrorCode::DimensionMismatch,
          std::string(who) + ": vector length vs convex function dimension");
}

}  // namespace

int ConvexSpec::dim() const {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>)
          return static_cast<int>(f.q.size());
        if constexpr (std::is_same_v<T, AffinePlus>)
          return static_cast<int>(f.a.size());
        if constexpr (std::is_same_v<T, GaugeWrapped>) return f.g.dim();
        if constexpr (std::is_same_v<T, GaugeMinusLinear>) return f.g.dim();
      },
      fn);
}

ConvexSpec make_quadratic(Matrix Q, Vector q, double r) {
  require(Q.rows() == Q.cols() && Q.rows() == q.size(),
          ErrorCode::DimensionMismatch, "quadratic: Q square matching q");
  Matrix S = 0.5 * (Q + Q.transpose());
  require(min_eigenvalue(S) >= -1e-10, ErrorCode::InvalidArgument,
          "quadratic: Q must be positive semidefinite (eigenvalue floor -1e-10)");
  return ConvexSpec{ConvexQuadratic{std::move(S), std::move(q), r}};
}

ConvexSpec make_affine_plus(Vector a, double r) {
  require(a.size() >= 1, ErrorCode::InvalidArgument, "affine_plus: empty a");
  return ConvexSpec{AffinePlus{std::move(a), r}};
}

ConvexSpec make_gauge_wrapped(GaugeSpec g) {
  return ConvexSpec{GaugeWrapped{std::move(g)}};
}

ConvexSpec make_gauge_minus_linear(GaugeSpec g, Vector eta) {
  require(static_cast<int>(eta.size()) == g.dim(), ErrorCode::DimensionMismatch,
          "gauge_minus_linear: eta dimension");
  ExtReal pol = eval_polar(g, eta);
  require(pol.is_finite() && pol.value() <= 1.0 + kDefaultTol,
          ErrorCode::NegativeFunctionValue,
          "gauge_minus_linear: g°(eta) > 1 makes the function negative");
  return ConvexSpec{GaugeMinusLinear{std::move(g), std::move(eta)}};
}

ExtReal eval_convex(const ConvexSpec& f, const Vector& x) {
  check_dim(f, x, "eval_convex");
  return std::visit(
      [&](const auto& spec) -> ExtReal {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          return x.dot(spec.Q * x) + spec.q.dot(x) + spec.r;
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          return std::max(0.0, spec.a.dot(x) + spec.r);
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          return eval(spec.g, x);
        } else {
          ExtReal gv = eval(spec.g, x);
          if (!gv.is_finite()) return gv;
          return gv.value() - spec.eta.dot(x);
        }
      },
      f.fn);
}

namespace {

// A subgradient of a gauge at z: eta with g°(eta) <= 1 and eta^T z = g(z).
Vector gauge_subgradient(const GaugeSpec& g, const Vector& z) {
  ExtReal gv = eval(g, z);
  require(gv.is_finite(), ErrorCode::AnchorOutOfDomain,
          "anchor lies outside the gauge domain");
  if (gv.value() == 0.0) return Vector::Zero(g.dim());  // minimizer: 0 works
  if (const auto* poly = std::get_if<PolyhedralGauge>(&g.fn)) {
    Vector act = poly->generators * z;
    int jstar = 0;
    for (int j = 1; j < act.size(); ++j)
      if (act(j) > act(jstar)) jstar = j;
    return poly->generators.row(jstar).transpose();
  }
  if (const auto* sc = std::get_if<ScaledGauge>(&g.fn)) {
    return sc->factor * gauge_subgradient(*sc->inner, z);
  }
  require(has_closed_polar_spec(g), ErrorCode::SubgradientUnavailable,
          "no subgradient rule for this gauge family away from its zero set");
  GaugeSpec polar = polar_spec(g);
  return support_argmax(polar, z).x_bar;
}

}  // namespace

Vector convex_subgradient(const ConvexSpec& f, const Vector& z) {
  check_dim(f, z, "convex_subgradient");
  return std::visit(
      [&](const auto& spec) -> Vector {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          return 2.0 * spec.Q * z + spec.q;
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          return (spec.a.dot(z) + spec.r > 0.0) ? spec.a
                                                : Vector::Zero(z.size());
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          return gauge_subgradient(spec.g, z);
        } else {
          return gauge_subgradient(spec.g, z) - spec.eta;
        }
      },
      f.fn);
}

ExtReal recession_value(const ConvexSpec& h, const Vector& x) {
  check_dim(h, x, "recession_value");
  return std::visit(
      [&](const auto& spec) -> ExtReal {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          const double tol = kRecessionNullTol * (1.0 + inf_norm(x));
          if (inf_norm(spec.Q * x) <= tol) return spec.q.dot(x);
          return ExtReal::infinity();
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          return std::max(0.0, spec.a.dot(x));
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          return eval(spec.g, x);
        } else {
          ExtReal gv = eval(spec.g, x);
          if (!gv.is_finite()) return gv;
          return gv.value() - spec.eta.dot(x);
        }
      },
      h.fn);
}

namespace {

struct MinInfo {
  ExtReal value;
  Vector argmin;
};

MinInfo convex_minimum(const ConvexSpec& f) {
  return std::visit(
      [&](const auto& spec) -> MinInfo {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          Vector xstar = least_squares(2.0 * spec.Q, -spec.q);
          const double resid = inf_norm(2.0 * spec.Q * xstar + spec.q);
          if (resid > 1e-8 * (1.0 + inf_norm(spec.q))) {
            // q has a component off range(Q): unbounded below
            return {ExtReal::neg_infinity(), xstar};
          }
          return {eval_convex(f, xstar), xstar};
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          const int n = static_cast<int>(spec.a.size());
          const double a2 = spec.a.squaredNorm();
          if (a2 == 0.0) return {std::max(0.0, spec.r), Vector::Zero(n)};
          Vector x = -(spec.r + 1.0) / a2 * spec.a;
          return {0.0, x};
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          return {0.0, Vector::Zero(spec.g.dim())};
        } else {
          return {0.0, Vector::Zero(spec.g.dim())};
        }
      },
      f.fn);
}

}  // namespace

ExtReal convex_min_value(const ConvexSpec& f) { return convex_minimum(f).value; }

Decomposition decompose(const ConvexSpec& f, const Vector& z) {
  check_dim(f, z, "decompose");
  ExtReal fz = eval_convex(f, z);
  require(fz.is_finite(), ErrorCode::AnchorOutOfDomain,
          "decompose: anchor outside dom f");
  Vector eta = convex_subgradient(f, z);

  ConvexSpec h = std::visit(
      [&](const auto& spec) -> ConvexSpec {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          // h(x) = f(x) - f(z) - eta^T (x - z) = (x-z)^T Q (x-z)
          return make_quadratic(spec.Q, spec.q - eta,
                                spec.r - fz.value() + eta.dot(z));
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          if (spec.a.dot(z) + spec.r > 0.0)
            return make_affine_plus(-spec.a, -spec.r);
          return make_affine_plus(spec.a, spec.r);
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          if (fz.value() == 0.0) return make_gauge_wrapped(spec.g);
          return make_gauge_minus_linear(spec.g, eta);
        } else {
          if (fz.value() == 0.0)
            return make_gauge_minus_linear(spec.g, spec.eta);
          return make_gauge_minus_linear(spec.g, eta + spec.eta);
        }
      },
      f.fn);

  Decomposition dec{z, std::move(eta), std::move(h), 0.0};
  dec.linear_constant = fz.value() - dec.eta.dot(z);
  return dec;
}

ExtReal eval_perspective(const ConvexSpec& h, const Vector& x, double zeta) {
  check_dim(h, x, "eval_perspective");
  if (zeta < 0.0) return ExtReal::infinity();
  if (zeta == 0.0) return recession_value(h, x);
  return eval_convex(h, x / zeta).scaled(zeta);
}

namespace {

// Minimize a convex extended-real function over the hyperplane {s | a^T s = 1}
// by deterministic multi-start compass search in null-space coordinates.
// phi is positively homogeneous in our uses, so 1/min gives the gauge polar.
template <typename F>
double minimize_on_hyperplane(F&& phi, const Vector& a) {
  const int d = static_cast<int>(a.size());
  Matrix arow(1, d);
  arow.row(0) = a.transpose();
  Vector one(1);
  one(0) = 1.0;
  AffineSet aff = affine_set(arow, one);
  const int dn = d - 1;

  auto value_at = [&](const Vector& xi) -> double {
    Vector s = aff.particular + (dn > 0 ? Vector(aff.nullspace * xi)
                                        : Vector::Zero(d));
    ExtReal v = phi(s);
    return v.is_finite() ? v.value() : std::numeric_limits<double>::infinity();
  };

  if (dn == 0) return value_at(Vector());

  std::vector<Vector> starts;
  starts.push_back(Vector::Zero(dn));
  for (int i = 0; i < dn; ++i) {
    for (double s : {2.0, -2.0, 0.5, -0.5}) {
      Vector xi = Vector::Zero(dn);
      xi(i) = s;
      starts.push_back(xi);
    }
  }
  // The whole candidate set can sit outside the domain (e.g. on the zeta < 0
  // side); bootstrap with an exponential axis sweep to find a finite value.
  bool any_finite = false;
  for (const Vector& s0 : starts) {
    if (std::isfinite(value_at(s0))) {
      any_finite = true;
      break;
    }
  }
  if (!any_finite) {
    for (int i = 0; i < dn && !any_finite; ++i) {
      for (double mag = 4.0; mag <= 1.0e7; mag *= 4.0) {
        Vector xi = Vector::Zero(dn);
        bool found = false;
        for (double sgn : {1.0, -1.0}) {
          xi(i) = sgn * mag;
          if (std::isfinite(value_at(xi))) {
            starts.push_back(xi);
            found = true;
          }
        }
        if (found) {
          any_finite = true;
          break;
        }
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  int evals = 0;
  const int cap = 60000;
  for (const Vector& s0 : starts) {
    Vector xi = s0;
    double fx = value_at(xi);
    ++evals;
    double h = 1.0;
    while (h > 1e-10 && evals < cap) {
      bool improved = false;
      for (int i = 0; i < dn && !improved; ++i) {
        for (double sgn : {1.0, -1.0}) {
          Vector cand = xi;
          cand(i) += sgn * h;
          const double fc = value_at(cand);
          ++evals;
          if (fc < fx - 1e-16) {
            xi = cand;
            fx = fc;
            improved = true;
            break;
          }
        }
      }
      if (improved) {
        h = std::min(4.0, 2.0 * h);
      } else {
        h *= 0.5;
      }
    }
    best = std::min(best, fx);
  }
  return best;
}

}  // namespace

ExtReal perspective_polar(const ConvexSpec& h, const Vector& y, double tau) {
  check_dim(h, y, "perspective_polar");
  const int n = h.dim();
  Vector a(n + 1);
  a.head(n) = y;
  a(n) = tau;
  if (inf_norm(a) == 0.0) return 0.0;

  // If h attains 0 at x0, the lifted ray t (x0, 1) has zero perspective
  // value; a positive inner product along it makes the polar infinite.
  MinInfo mi = convex_minimum(h);
  if (mi.value.is_finite() && std::abs(mi.value.value()) <= kDefaultTol) {
    const double along = y.dot(mi.argmin) + tau;
    if (along > kPerspectiveDomainTol * (1.0 + inf_norm(a))) {
      return ExtReal::infinity();
    }
  }

  return std::visit(
      [&](const auto& spec) -> ExtReal {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, GaugeWrapped>) {
          // h^pi(x, zeta) = h(x) for zeta >= 0: polar is g°(y) for tau <= 0
          if (tau > kPerspectiveDomainTol) return ExtReal::infinity();
          return eval_polar(spec.g, y);
        } else if constexpr (std::is_same_v<T, GaugeMinusLinear>) {
          if (tau > kPerspectiveDomainTol) return ExtReal::infinity();
          if (inf_norm(y) == 0.0) return 0.0;
          const double mu = minimize_on_hyperplane(
              [&](const Vector& s) { return eval_convex(ConvexSpec{spec}, s); },
              y);
          if (mu <= 1e-9) return ExtReal::infinity();
          if (!std::isfinite(mu)) return 0.0;
          return 1.0 / mu;
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          // h^pi(x, zeta) = max(0, a^T x + r zeta) on zeta >= 0: exact LP
          Matrix A_ub(2, n + 1);
          A_ub.row(0).head(n) = spec.a.transpose();
          A_ub(0, n) = spec.r;
          A_ub.row(1).setZero();
          A_ub(1, n) = -1.0;
          Vector b_ub(2);
          b_ub << 1.0, 0.0;
          Matrix no_eq(0, n + 1);
          Vector no_rhs(0);
          LpResult lp = lp_solve(-a, no_eq, no_rhs, A_ub, b_ub);
          if (lp.status == LpStatus::Unbounded) return ExtReal::infinity();
          require(lp.status == LpStatus::Optimal, ErrorCode::InvalidArgument,
                  "perspective polar LP failed");
          return -lp.objective;
        } else {
          const double mu = minimize_on_hyperplane(
              [&](const Vector& s) {
                return eval_perspective(ConvexSpec{spec}, s.head(n), s(n));
              },
              a);
          if (mu <= 1e-9) return ExtReal::infinity();
          if (!std::isfinite(mu)) return 0.0;
          return 1.0 / mu;
        }
      },
      h.fn);
}

bool perspective_definite(const ConvexSpec& h) {
  if (const auto* quad = std::get_if<ConvexQuadratic>(&h.fn)) {
    if (quad->Q.rows() == 0) return false;
    if (min_eigenvalue(quad->Q) <= 1e-9) return false;
    ExtReal lo = convex_min_value(h);
    return lo.is_finite() && lo.value() > 1e-9;
  }
  return false;
}

GaugeSpec make_perspective(ConvexSpec h) {
  ExtReal lo = convex_min_value(h);
  require(!lo.is_neg_inf() && lo.value() >= -kDefaultTol,
          ErrorCode::NegativeFunctionValue,
          "perspective gauge requires a nonnegative source function");
  const int lifted = h.dim() + 1;
  return GaugeSpec{
      PerspectiveWrap{std::make_shared<const ConvexSpec>(std::move(h)), lifted}};
}

ConvexProblem make_convex_problem(Vector c, Vector d, Vector b, Vector p,
                                  Matrix A, Matrix H, Matrix K,
                                  BlockPartition partition,
                                  std::vector<ConvexSpec> f,
                                  double objective_offset) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(d.size());
  const int k = static_cast<int>(b.size());
  const int l = static_cast<int>(p.size());
  if (A.size() == 0) A = Matrix::Zero(k, n);
  if (H.size() == 0) H = Matrix::Zero(l, n);
  if (K.size() == 0) K = Matrix::Zero(l, m);
  require(A.rows() == k && A.cols() == n, ErrorCode::DimensionMismatch, "A is k x n");
  require(H.rows() == l && H.cols() == n, ErrorCode::DimensionMismatch, "H is l x n");
  require(K.rows() == l && K.cols() == m, ErrorCode::DimensionMismatch, "K is l x m");
  require(partition.total == n, ErrorCode::DimensionMismatch,
          "partition must cover all variables");
  require(partition.count() == m && static_cast<int>(f.size()) == m,
          ErrorCode::DimensionMismatch, "one convex block per d entry");
  for (int i = 0; i < m; ++i) {
    require(f[i].dim() == partition.block_size(i), ErrorCode::DimensionMismatch,
            "convex block dimension at block " + std::to_string(i));
  }
  ConvexProblem pf;
  pf.c = std::move(c);
  pf.d = std::move(d);
  pf.b = std::move(b);
  pf.p = std::move(p);
  pf.A = std::move(A);
  pf.H = std::move(H);
  pf.K = std::move(K);
  pf.partition = std::move(partition);
  pf.f = std::move(f);
  pf.objective_offset = objective_offset;
  return pf;
}

namespace {

Vector gather_block(const BlockPartition& part, const Vector& x, int i) {
  const auto& blk = part.blocks[i];
  Vector xi(blk.size());
  for (size_t t = 0; t < blk.size(); ++t) xi(t) = x(blk[t]);
  return xi;
}

}  // namespace

ExtReal convex_objective(const ConvexProblem& pf, const Vector& x) {
  require(static_cast<int>(x.size()) == pf.n(), ErrorCode::DimensionMismatch,
          "convex objective: point length");
  double obj = pf.c.dot(x) + pf.objective_offset;
  for (int i = 0; i < pf.m(); ++i) {
    ExtReal fi = eval_convex(pf.f[i], gather_block(pf.partition, x, i));
    if (!fi.is_finite()) return ExtReal::infinity();
    obj += pf.d(i) * fi.value();
  }
  return obj;
}

FeasReport convex_feasibility(const ConvexProblem& pf, const Vector& x,
                              double tol) {
  FeasReport rep;
  Vector fv(pf.m());
  for (int i = 0; i < pf.m(); ++i) {
    ExtReal fi = eval_convex(pf.f[i], gather_block(pf.partition, x, i));
    if (!fi.is_finite()) {
      rep.in_domain = false;
      rep.eq_residual = std::numeric_limits<double>::infinity();
      rep.ineq_violation = std::numeric_limits<double>::infinity();
      return rep;
    }
    fv(i) = fi.value();
  }
  if (pf.k() > 0) rep.eq_residual = inf_norm(pf.A * x - pf.b);
  if (pf.l() > 0) {
    Vector slack = pf.H * x + pf.K * fv - pf.p;
    rep.ineq_violation = std::max(0.0, slack.maxCoeff());
  }
  rep.feasible = rep.eq_residual <= tol && rep.ineq_violation <= tol;
  return rep;
}

NonnegativeReduction fold_to_nonnegative(const ConvexProblem& pf) {
  std::vector<Vector> anchors;
  anchors.reserve(pf.m());
  for (int i = 0; i < pf.m(); ++i)
    anchors.push_back(Vector::Zero(pf.partition.block_size(i)));
  return fold_to_nonnegative(pf, anchors);
}

NonnegativeReduction fold_to_nonnegative(const ConvexProblem& pf,
                                         const std::vector<Vector>& anchors) {
  require(static_cast<int>(anchors.size()) == pf.m(),
          ErrorCode::DimensionMismatch, "one anchor per block");
  NonnegativeReduction red;
  red.shifted = pf;
  Matrix E = Matrix::Zero(pf.m(), pf.n());  // row i: eta_i embedded
  Vector kappa(pf.m());
  for (int i = 0; i < pf.m(); ++i) {
    Decomposition dec = decompose(pf.f[i], anchors[i]);
    const auto& blk = pf.partition.blocks[i];
    for (size_t t = 0; t < blk.size(); ++t) E(i, blk[t]) = dec.eta(t);
    kappa(i) = dec.linear_constant;
    red.shifted.f[i] = dec.nonneg_part;
    red.decompositions.push_back(std::move(dec));
  }
  red.shifted.c += E.transpose() * pf.d;
  red.shifted.objective_offset += pf.d.dot(kappa);
  if (pf.l() > 0) {
    red.shifted.H += pf.K * E;
    red.shifted.p -= pf.K * kappa;
  }
  return red;
}

PerspectiveProblem build_perspective_problem(const ConvexProblem& pf) {
  for (int i = 0; i < pf.m(); ++i) {
    ExtReal lo = convex_min_value(pf.f[i]);
    require(!lo.is_neg_inf() && lo.value() >= -kDefaultTol,
            ErrorCode::NegativeFunctionValue,
            "block " + std::to_string(i) +
                " takes negative values; decompose first and fold the linear"
                " part into the objective");
  }

  const int n = pf.n(), m = pf.m(), k = pf.k(), l = pf.l();
  const int N = n + m;
  PerspectiveProblem pp;
  pp.source = pf;
  pp.zeta_position.resize(m);
  pp.pin_row.resize(m);
  pp.source_column.resize(n);

  int off = 0;
  std::vector<std::vector<int>> lifted_blocks(m);
  for (int i = 0; i < m; ++i) {
    const auto& blk = pf.partition.blocks[i];
    for (size_t t = 0; t < blk.size(); ++t) {
      pp.source_column[blk[t]] = off + static_cast<int>(t);
      lifted_blocks[i].push_back(off + static_cast<int>(t));
    }
    pp.zeta_position[i] = off + static_cast<int>(blk.size());
    lifted_blocks[i].push_back(pp.zeta_position[i]);
    off += static_cast<int>(blk.size()) + 1;
  }

  Vector c_hat = Vector::Zero(N);
  for (int j = 0; j < n; ++j) c_hat(pp.source_column[j]) = pf.c(j);

  // Equality rows and zeta-pinning rows interleave; leftover rows append.
  const int rows = k + m;
  Matrix A_hat = Matrix::Zero(rows, N);
  Vector b_hat = Vector::Zero(rows);
  int r = 0;
  for (int i = 0; i < std::max(k, m); ++i) {
    if (i < k) {
      for (int j = 0; j < n; ++j) A_hat(r, pp.source_column[j]) = pf.A(i, j);
      b_hat(r) = pf.b(i);
      ++r;
    }
    if (i < m) {
      A_hat(r, pp.zeta_position[i]) = 1.0;
      b_hat(r) = 1.0;
      pp.pin_row[i] = r;
      ++r;
    }
  }

  Matrix H_hat = Matrix::Zero(l, N);
  for (int j = 0; j < n; ++j) H_hat.col(pp.source_column[j]) = pf.H.col(j);

  std::vector<GaugeSpec> specs;
  specs.reserve(m);
  for (int i = 0; i < m; ++i) specs.push_back(make_perspective(pf.f[i]));
  VectorGauge vg =
      make_vector_gauge(make_partition(N, std::move(lifted_blocks)),
                        std::move(specs));

  pp.lifted = make_gauge_problem(std::move(c_hat), pf.d, std::move(b_hat),
                                 pf.p, std::move(A_hat), std::move(H_hat),
                                 pf.K, std::move(vg));
  return pp;
}

PerspectiveDual build_perspective_dual(const PerspectiveProblem& pp) {
  PerspectiveDual pd;
  pd.lifted = pp.lifted;
  const int k = pp.source.k(), m = pp.source.m();
  int r = 0;
  for (int i = 0; i < std::max(k, m); ++i) {
    if (i < k) pd.u_rows.push_back(r++);
    if (i < m) pd.w_rows.push_back(r++);
  }
  return pd;
}

std::pair<Vector, Vector> assemble_lifted_dual(const PerspectiveDual& pd,
                                               const Vector& u, const Vector& v,
                                               const Vector& w) {
  require(u.size() == static_cast<int>(pd.u_rows.size()) &&
              w.size() == static_cast<int>(pd.w_rows.size()),
          ErrorCode::DimensionMismatch, "assemble_lifted_dual: (u, w) sizes");
  Vector u_hat = Vector::Zero(pd.lifted.k());
  for (size_t i = 0; i < pd.u_rows.size(); ++i) u_hat(pd.u_rows[i]) = u(i);
  for (size_t i = 0; i < pd.w_rows.size(); ++i) u_hat(pd.w_rows[i]) = w(i);
  return {u_hat, v};
}

Vector lift_primal(const PerspectiveProblem& pp, const Vector& x) {
  require(static_cast<int>(x.size()) == pp.source.n(),
          ErrorCode::DimensionMismatch, "lift_primal: point length");
  Vector z = Vector::Zero(pp.lifted.n());
  for (int j = 0; j < pp.source.n(); ++j) z(pp.source_column[j]) = x(j);
  for (int i = 0; i < pp.source.m(); ++i) z(pp.zeta_position[i]) = 1.0;
  return z;
}

}  // namespace gaugekit
