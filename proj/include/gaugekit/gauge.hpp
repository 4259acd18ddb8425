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

#include <limits>
#include <memory>
#include <variant>

#include "gaugekit/extreal.hpp"
#include "gaugekit/linalg.hpp"

namespace gaugekit {

struct ConvexSpec;  // perspective.hpp

/// Default absolute tolerance for floating comparisons.
constexpr double kDefaultTol = 1e-9;

constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// lp norm on R^dim, p in [1, inf]. p = kInfExponent encodes the max norm.
struct PNorm {
  double p;
  int dim;
};

/// (sum_j w_j |x_j|^p)^(1/p) with w > 0; for p = inf, max_j w_j |x_j|.
struct WeightedPNorm {
  double p;
  Vector w;
};

struct GaugeSpec;

/// factor * inner(x) with factor > 0.
struct ScaledGauge {
  double factor;
  std::shared_ptr<const GaugeSpec> inner;
};

/// g(x) = max(0, max_j a_j^T x) over the generator rows a_j. `definite` is
/// precomputed at construction: true iff {x | a_j^T x <= 0 for all j} = {0},
/// i.e. the generators positively span the space.
struct PolyhedralGauge {
  Matrix generators;
  bool definite = false;
};

/// Indicator function of a polyhedral cone C, in one of three shapes:
///   Orthant     C = {x >= 0}
///   Halfspaces  C = {x | M x <= 0}
///   Generated   C = {M^T nu | nu >= 0}  (cone spanned by the rows of M)
/// Polar cones stay inside this family: Orthant° = Halfspaces(I) and
/// Halfspaces(M)° = Generated(M), Generated(M)° = Halfspaces(M).
struct ConeIndicator {
  enum class Rep { Orthant, Halfspaces, Generated };
  Rep rep;
  int dim;
  Matrix M;  // unused for Orthant
};

/// Closure of the perspective (x, zeta) -> zeta h(x / zeta) of a nonnegative
/// convex h, with the recession function of h on the zeta = 0 face. Dimension
/// is dim(h) + 1; the lifted coordinate order is (x, zeta).
struct PerspectiveWrap {
  std::shared_ptr<const ConvexSpec> h;
  int lifted_dim;
};

struct GaugeSpec {
  std::variant<PNorm, WeightedPNorm, ScaledGauge, PolyhedralGauge,
               ConeIndicator, PerspectiveWrap>
      fn;

  int dim() const;
};

GaugeSpec make_pnorm(double p, int dim);
GaugeSpec make_weighted_pnorm(double p, Vector w);
GaugeSpec make_scaled(double factor, GaugeSpec inner);
GaugeSpec make_polyhedral(Matrix generators);
GaugeSpec make_orthant_indicator(int dim);
GaugeSpec make_halfspace_cone_indicator(Matrix M);
GaugeSpec make_generated_cone_indicator(Matrix M);
GaugeSpec make_perspective(ConvexSpec h);  // defined in perspective.cpp

/// g(x); +inf exactly off the effective domain. Positively homogeneous.
ExtReal eval(const GaugeSpec& g, const Vector& x);

/// Polar value g°(y) = sup { x^T y | g(x) <= 1 }. Closed form for the norm
/// families and cone indicators; an LP for polyhedral gauges; a numeric
/// support maximization for perspective gauges. Always >= 0.
ExtReal eval_polar(const GaugeSpec& g, const Vector& y);

struct SupportResult {
  Vector x_bar;
  bool on_unit_sphere;
};

/// One maximizer of alpha^T x over the unit ball {g <= 1}, with
/// alpha^T x_bar = g°(alpha). Requires a definite gauge (vanishing only at
/// the origin); alpha = 0 returns the origin.
///
/// Tie-breaking is deterministic: for p = 1 the lowest coordinate index
/// attaining max |alpha_j| wins, and for p = inf zero components map to +1 so
/// the result stays on the unit sphere.
SupportResult support_argmax(const GaugeSpec& g, const Vector& alpha);

/// Closed-form polar gauge. Available for the norm families, scaled gauges
/// and cone indicators; polyhedral and perspective gauges have no closed
/// polar here and their polar values are computed by LP / numerically.
GaugeSpec polar_spec(const GaugeSpec& g);
bool has_closed_polar_spec(const GaugeSpec& g);

/// True iff g(x) = 0 only at x = 0.
bool vanishes_only_at_origin(const GaugeSpec& g);
/// True iff dom g = R^dim.
bool has_full_domain(const GaugeSpec& g);
/// True iff g is not identically zero on its domain.
bool not_identically_zero(const GaugeSpec& g);

/// Conjugate exponent: 1 <-> inf, otherwise p / (p - 1).
double conjugate_exponent(double p);

namespace detail {
/// LP-backed support evaluation for polyhedral gauges and cone indicators.
/// When the supremum is +inf, `ray` carries a feasible direction with
/// y^T ray > 0; otherwise `argmax` attains the value.
struct SupportLpOutcome {
  ExtReal value;
  Vector argmax;
  Vector ray;
  bool unbounded = false;
};
SupportLpOutcome polyhedral_support(const Matrix& generators, const Vector& y);
SupportLpOutcome cone_support(const ConeIndicator& cone, const Vector& y);
}  // namespace detail

}  // namespace gaugekit
