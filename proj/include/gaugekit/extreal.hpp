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

#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>

namespace gaugekit {

/// Extended real value on [-inf, +inf]. Gauge evaluations live in [0, +inf];
/// the Lagrangian dual additionally takes the value -inf. Arithmetic never
/// produces NaN: the indeterminate products (0 * inf) are only formed through
/// the named helpers below, each of which fixes a convention.
class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0) {}
  constexpr ExtReal(double v) : v_(v) {}  // NOLINT: implicit on purpose

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }
  static constexpr ExtReal neg_infinity() {
    return ExtReal(-std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_pos_inf() const { return std::isinf(v_) && v_ > 0; }
  bool is_neg_inf() const { return std::isinf(v_) && v_ < 0; }

  /// Underlying double; +-inf when infinite.
  double value() const { return v_; }

  ExtReal operator-() const { return ExtReal(-v_); }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    assert(!(a.is_pos_inf() && b.is_neg_inf()));
    assert(!(a.is_neg_inf() && b.is_pos_inf()));
    return ExtReal(a.v_ + b.v_);
  }
  friend ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  /// Positive scaling t * v for t > 0 (t * inf = inf). t == 0 yields 0 for
  /// finite v and is asserted away for infinite v.
  ExtReal scaled(double t) const {
    assert(t >= 0.0);
    if (t == 0.0) {
      assert(is_finite());
      return ExtReal(0.0);
    }
    return ExtReal(t * v_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtReal v) {
    if (v.is_pos_inf()) return os << "+inf";
    if (v.is_neg_inf()) return os << "-inf";
    return os << v.v_;
  }

 private:
  double v_;
};

/// Product a * b used on the large side of the Hoelder-type inequality
/// g(x) g°(y) >= x^T y. Convention: 0 * inf = inf, so the inequality is
/// conservatively true whenever either factor is infinite.
inline ExtReal hoelder_product(ExtReal a, ExtReal b) {
  assert(a >= 0.0 && b >= 0.0);
  if (!a.is_finite() || !b.is_finite()) return ExtReal::infinity();
  return ExtReal(a.value() * b.value());
}

/// Product r * g used inside complementarity sums, where g is a gauge value.
/// Convention: anything * 0 = 0 (a vanished gauge value kills the term), and
/// an infinite factor against a nonzero gauge value is infinite.
inline ExtReal complementarity_product(ExtReal r, ExtReal g) {
  assert(g >= 0.0);
  if (g == 0.0) return ExtReal(0.0);
  if (!r.is_finite() || !g.is_finite()) {
    return (r < 0.0) ? ExtReal::neg_infinity() : ExtReal::infinity();
  }
  return ExtReal(r.value() * g.value());
}

}  // namespace gaugekit
