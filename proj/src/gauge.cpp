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

#include "gaugekit/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "gaugekit/errors.hpp"
#include "gaugekit/lp.hpp"
#include "gaugekit/perspective.hpp"

namespace gaugekit {

namespace {

constexpr double kDomainTol = 1e-9;

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void check_dim(const GaugeSpec& g, const Vector& x, const char* who) {
  require(static_cast<int>(x.size()) == g.dim(), ErrorCode::DimensionMismatch,
          std::string(who) + ": vector length " + std::to_string(x.size()) +
              " vs gauge dimension " + std::to_string(g.dim()));
}

double pnorm_value(double p, const Vector& x) {
  if (p == kInfExponent) return inf_norm(x);
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (int i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
  return std::pow(s, 1.0 / p);
}

// Cone {x | Mx <= 0} equals {0} iff every signed coordinate LP
// sup {+-x_i | Mx <= 0} is bounded (value 0).
bool halfspace_cone_is_origin(const Matrix& M) {
  const int n = static_cast<int>(M.cols());
  Matrix no_eq(0, n);
  Vector no_rhs(0);
  Vector zero_rhs = Vector::Zero(M.rows());
  for (int i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      Vector c = Vector::Zero(n);
      c(i) = -s;  // maximize s * x_i
      LpResult r = lp_solve(c, no_eq, no_rhs, M, zero_rhs);
      if (r.status != LpStatus::Optimal) return false;
    }
  }
  return true;
}

}  // namespace

int GaugeSpec::dim() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PNorm>) return g.dim;
        if constexpr (std::is_same_v<T, WeightedPNorm>)
          return static_cast<int>(g.w.size());
        if constexpr (std::is_same_v<T, ScaledGauge>) return g.inner->dim();
        if constexpr (std::is_same_v<T, PolyhedralGauge>)
          return static_cast<int>(g.generators.cols());
        if constexpr (std::is_same_v<T, ConeIndicator>) return g.dim;
        if constexpr (std::is_same_v<T, PerspectiveWrap>) return g.lifted_dim;
      },
      fn);
}

GaugeSpec make_pnorm(double p, int dim) {
  require(dim >= 1, ErrorCode::InvalidArgument, "pnorm: dimension >= 1");
  require(p >= 1.0, ErrorCode::InvalidArgument, "pnorm: p must be in [1, inf]");
  return GaugeSpec{PNorm{p, dim}};
}

GaugeSpec make_weighted_pnorm(double p, Vector w) {
  require(w.size() >= 1, ErrorCode::InvalidArgument, "weighted pnorm: empty weights");
  require(p >= 1.0, ErrorCode::InvalidArgument, "weighted pnorm: p must be in [1, inf]");
  require(w.minCoeff() > 0.0, ErrorCode::InvalidArgument,
          "weighted pnorm: weights must be positive");
  return GaugeSpec{WeightedPNorm{p, std::move(w)}};
}

GaugeSpec make_scaled(double factor, GaugeSpec inner) {
  require(factor > 0.0, ErrorCode::InvalidArgument, "scaled gauge: factor > 0");
  return GaugeSpec{
      ScaledGauge{factor, std::make_shared<const GaugeSpec>(std::move(inner))}};
}

GaugeSpec make_polyhedral(Matrix generators) {
  require(generators.rows() >= 1 && generators.cols() >= 1,
          ErrorCode::InvalidArgument, "polyhedral gauge: empty generator set");
  PolyhedralGauge g;
  g.definite = halfspace_cone_is_origin(generators);
  g.generators = std::move(generators);
  return GaugeSpec{std::move(g)};
}

GaugeSpec make_orthant_indicator(int dim) {
  require(dim >= 1, ErrorCode::InvalidArgument, "cone indicator: dimension >= 1");
  return GaugeSpec{ConeIndicator{ConeIndicator::Rep::Orthant, dim, Matrix()}};
}

GaugeSpec make_halfspace_cone_indicator(Matrix M) {
  require(M.rows() >= 1 && M.cols() >= 1, ErrorCode::InvalidArgument,
          "cone indicator: empty halfspace matrix");
  const int dim = static_cast<int>(M.cols());
  return GaugeSpec{ConeIndicator{ConeIndicator::Rep::Halfspaces, dim, std::move(M)}};
}

GaugeSpec make_generated_cone_indicator(Matrix M) {
  require(M.rows() >= 1 && M.cols() >= 1, ErrorCode::InvalidArgument,
          "cone indicator: empty generator matrix");
  const int dim = static_cast<int>(M.cols());
  return GaugeSpec{ConeIndicator{ConeIndicator::Rep::Generated, dim, std::move(M)}};
}

double conjugate_exponent(double p) {
  if (p == 1.0) return kInfExponent;
  if (p == kInfExponent) return 1.0;
  return p / (p - 1.0);
}

ExtReal eval(const GaugeSpec& g, const Vector& x) {
  check_dim(g, x, "eval");
  return std::visit(
      [&](const auto& spec) -> ExtReal {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm>) {
          return pnorm_value(spec.p, x);
        } else if constexpr (std::is_same_v<T, WeightedPNorm>) {
          if (spec.p == kInfExponent)
            return inf_norm(spec.w.cwiseProduct(x.cwiseAbs()));
          double s = 0.0;
          for (int i = 0; i < x.size(); ++i)
            s += spec.w(i) * std::pow(std::abs(x(i)), spec.p);
          return std::pow(s, 1.0 / spec.p);
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          return eval(*spec.inner, x).scaled(spec.factor);
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          return std::max(0.0, (spec.generators * x).maxCoeff());
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          const double tol = kDomainTol * (1.0 + inf_norm(x));
          switch (spec.rep) {
            case ConeIndicator::Rep::Orthant:
              return x.minCoeff() >= -tol ? ExtReal(0.0) : ExtReal::infinity();
            case ConeIndicator::Rep::Halfspaces:
              return (spec.M * x).maxCoeff() <= tol ? ExtReal(0.0)
                                                    : ExtReal::infinity();
            case ConeIndicator::Rep::Generated: {
              // membership x in cone(rows of M) via an LP feasibility check
              const int r = static_cast<int>(spec.M.rows());
              Vector zero_cost = Vector::Zero(r);
              Matrix nonneg = -Matrix::Identity(r, r);
              Vector zero_rhs = Vector::Zero(r);
              LpResult lp = lp_solve(zero_cost, spec.M.transpose(), x, nonneg,
                                     zero_rhs);
              return lp.status == LpStatus::Optimal ? ExtReal(0.0)
                                                    : ExtReal::infinity();
            }
          }
          return ExtReal::infinity();
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          const int nh = spec.lifted_dim - 1;
          return eval_perspective(*spec.h, x.head(nh), x(nh));
        }
      },
      g.fn);
}

namespace detail {

SupportLpOutcome polyhedral_support(const Matrix& generators, const Vector& y) {
  const int n = static_cast<int>(generators.cols());
  SupportLpOutcome out;
  Matrix no_eq(0, n);
  Vector no_rhs(0);
  Vector ones = Vector::Ones(generators.rows());
  LpResult lp = lp_solve(-y, no_eq, no_rhs, generators, ones);
  if (lp.status == LpStatus::Unbounded) {
    out.value = ExtReal::infinity();
    out.unbounded = true;
    out.ray = lp.ray;
    return out;
  }
  require(lp.status == LpStatus::Optimal, ErrorCode::InvalidArgument,
          "polyhedral support LP did not converge");
  out.value = -lp.objective;
  out.argmax = lp.x;
  return out;
}

SupportLpOutcome cone_support(const ConeIndicator& cone, const Vector& y) {
  SupportLpOutcome out;
  const int n = cone.dim;
  const double tol = kDomainTol * (1.0 + inf_norm(y));
  switch (cone.rep) {
    case ConeIndicator::Rep::Orthant: {
      if (y.maxCoeff() <= tol) {
        out.value = 0.0;
        out.argmax = Vector::Zero(n);
        return out;
      }
      int j = 0;
      for (; j < n; ++j)
        if (y(j) > tol) break;
      out.value = ExtReal::infinity();
      out.unbounded = true;
      out.ray = Vector::Zero(n);
      out.ray(j) = 1.0;
      return out;
    }
    case ConeIndicator::Rep::Halfspaces: {
      Matrix no_eq(0, n);
      Vector no_rhs(0);
      Vector zero_rhs = Vector::Zero(cone.M.rows());
      LpResult lp = lp_solve(-y, no_eq, no_rhs, cone.M, zero_rhs);
      if (lp.status == LpStatus::Unbounded) {
        out.value = ExtReal::infinity();
        out.unbounded = true;
        out.ray = lp.ray;
        return out;
      }
      out.value = 0.0;
      out.argmax = Vector::Zero(n);
      return out;
    }
    case ConeIndicator::Rep::Generated: {
      // sup over nu >= 0 of y^T M^T nu: unbounded along any generator row
      // with positive inner product.
      Vector inner = cone.M * y;
      int best = -1;
      for (int i = 0; i < inner.size(); ++i) {
        const double scale = std::max(1.0, cone.M.row(i).norm());
        if (inner(i) > tol * scale) {
          best = i;
          break;
        }
      }
      if (best < 0) {
        out.value = 0.0;
        out.argmax = Vector::Zero(n);
        return out;
      }
      out.value = ExtReal::infinity();
      out.unbounded = true;
      out.ray = cone.M.row(best).transpose();
      out.ray /= out.ray.norm();
      return out;
    }
  }
  out.value = ExtReal::infinity();
  return out;
}

}  // namespace detail

ExtReal eval_polar(const GaugeSpec& g, const Vector& y) {
  check_dim(g, y, "eval_polar");
  return std::visit(
      [&](const auto& spec) -> ExtReal {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm>) {
          return pnorm_value(conjugate_exponent(spec.p), y);
        } else if constexpr (std::is_same_v<T, WeightedPNorm>) {
          const GaugeSpec polar = polar_spec(g);
          const auto& wp = std::get<WeightedPNorm>(polar.fn);
          Vector yy = y;
          if (wp.p == kInfExponent) return inf_norm(wp.w.cwiseProduct(yy.cwiseAbs()));
          double s = 0.0;
          for (int i = 0; i < y.size(); ++i)
            s += wp.w(i) * std::pow(std::abs(y(i)), wp.p);
          return std::pow(s, 1.0 / wp.p);
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          return eval_polar(*spec.inner, y).scaled(1.0 / spec.factor);
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          return detail::polyhedral_support(spec.generators, y).value;
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          return detail::cone_support(spec, y).value;
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          const int nh = spec.lifted_dim - 1;
          return perspective_polar(*spec.h, y.head(nh), y(nh));
        }
      },
      g.fn);
}

SupportResult support_argmax(const GaugeSpec& g, const Vector& alpha) {
  check_dim(g, alpha, "support_argmax");
  require(vanishes_only_at_origin(g), ErrorCode::GaugeNotDefinite,
          "support_argmax requires a gauge vanishing only at the origin");
  const int n = g.dim();
  if (inf_norm(alpha) == 0.0) return {Vector::Zero(n), false};

  return std::visit(
      [&](const auto& spec) -> SupportResult {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm>) {
          Vector x = Vector::Zero(n);
          if (spec.p == 1.0) {
            int j = 0;
            for (int i = 1; i < n; ++i)
              if (std::abs(alpha(i)) > std::abs(alpha(j))) j = i;
            x(j) = sign_of(alpha(j));
          } else if (spec.p == kInfExponent) {
            for (int i = 0; i < n; ++i) x(i) = alpha(i) < 0.0 ? -1.0 : 1.0;
          } else {
            const double q = conjugate_exponent(spec.p);
            const double nq = pnorm_value(q, alpha);
            for (int i = 0; i < n; ++i)
              x(i) = sign_of(alpha(i)) *
                     std::pow(std::abs(alpha(i)) / nq, q - 1.0);
          }
          return {x, true};
        } else if constexpr (std::is_same_v<T, WeightedPNorm>) {
          Vector x = Vector::Zero(n);
          if (spec.p == 1.0) {
            int j = 0;
            for (int i = 1; i < n; ++i)
              if (std::abs(alpha(i)) / spec.w(i) > std::abs(alpha(j)) / spec.w(j))
                j = i;
            x(j) = sign_of(alpha(j)) / spec.w(j);
          } else if (spec.p == kInfExponent) {
            for (int i = 0; i < n; ++i)
              x(i) = (alpha(i) < 0.0 ? -1.0 : 1.0) / spec.w(i);
          } else {
            Vector scale(n), beta(n);
            for (int i = 0; i < n; ++i) {
              scale(i) = std::pow(spec.w(i), -1.0 / spec.p);
              beta(i) = alpha(i) * scale(i);
            }
            SupportResult inner =
                support_argmax(make_pnorm(spec.p, n), beta);
            x = scale.cwiseProduct(inner.x_bar);
          }
          return {x, true};
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          SupportResult inner = support_argmax(*spec.inner, alpha);
          inner.x_bar /= spec.factor;
          return inner;
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          auto lp = detail::polyhedral_support(spec.generators, alpha);
          // definite gauge => bounded support
          require(!lp.unbounded, ErrorCode::GaugeNotDefinite,
                  "polyhedral support unbounded");
          const double gv = eval(g, lp.argmax).value();
          return {lp.argmax, std::abs(gv - 1.0) <= kDefaultTol};
        } else {
          fail(ErrorCode::GaugeNotDefinite,
               "support_argmax is not available for this gauge family");
        }
      },
      g.fn);
}

bool has_closed_polar_spec(const GaugeSpec& g) {
  return std::visit(
      [](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ScaledGauge>)
          return has_closed_polar_spec(*spec.inner);
        else
          return std::is_same_v<T, PNorm> || std::is_same_v<T, WeightedPNorm> ||
                 std::is_same_v<T, ConeIndicator>;
      },
      g.fn);
}

GaugeSpec polar_spec(const GaugeSpec& g) {
  return std::visit(
      [&](const auto& spec) -> GaugeSpec {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm>) {
          return make_pnorm(conjugate_exponent(spec.p), spec.dim);
        } else if constexpr (std::is_same_v<T, WeightedPNorm>) {
          const double q = conjugate_exponent(spec.p);
          Vector wq(spec.w.size());
          if (spec.p == 1.0 || spec.p == kInfExponent) {
            wq = spec.w.cwiseInverse();
          } else {
            for (int i = 0; i < spec.w.size(); ++i)
              wq(i) = std::pow(spec.w(i), -q / spec.p);
          }
          return make_weighted_pnorm(q, wq);
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          return make_scaled(1.0 / spec.factor, polar_spec(*spec.inner));
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          switch (spec.rep) {
            case ConeIndicator::Rep::Orthant:
              return make_halfspace_cone_indicator(
                  Matrix::Identity(spec.dim, spec.dim));
            case ConeIndicator::Rep::Halfspaces:
              return make_generated_cone_indicator(spec.M);
            case ConeIndicator::Rep::Generated:
              return make_halfspace_cone_indicator(spec.M);
          }
          fail(ErrorCode::InvalidArgument, "unknown cone representation");
        } else {
          fail(ErrorCode::InvalidArgument,
               "no closed-form polar for this gauge family; use eval_polar");
        }
      },
      g.fn);
}

bool vanishes_only_at_origin(const GaugeSpec& g) {
  return std::visit(
      [](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm> ||
                      std::is_same_v<T, WeightedPNorm>) {
          return true;
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          return vanishes_only_at_origin(*spec.inner);
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          return spec.definite;
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          return false;
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          return perspective_definite(*spec.h);
        }
      },
      g.fn);
}

bool has_full_domain(const GaugeSpec& g) {
  return std::visit(
      [](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ScaledGauge>) {
          return has_full_domain(*spec.inner);
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          return spec.rep == ConeIndicator::Rep::Halfspaces &&
                 spec.M.cwiseAbs().maxCoeff() == 0.0;
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          return false;  // zeta < 0 is always outside
        } else {
          return true;
        }
      },
      g.fn);
}

bool not_identically_zero(const GaugeSpec& g) {
  return std::visit(
      [](const auto& spec) -> bool {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, PNorm> ||
                      std::is_same_v<T, WeightedPNorm>) {
          return true;
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          return not_identically_zero(*spec.inner);
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          return spec.generators.cwiseAbs().maxCoeff() > 0.0;
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          // an indicator is 0 on its domain; "nonzero somewhere" never holds
          return false;
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          return true;  // h^pi(x, zeta) > 0 wherever h(x/zeta) > 0
        }
      },
      g.fn);
}

}  // namespace gaugekit
