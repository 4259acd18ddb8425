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

#include <cstdint>
#include <functional>

#include "gaugekit/linalg.hpp"

namespace gaugekit {

/// Regular lattice over the box [lo, hi] with `steps` points per dimension.
struct GridSpec {
  Vector lo;
  Vector hi;
  int steps = 2;

  int dims() const { return static_cast<int>(lo.size()); }
};

std::int64_t grid_size(const GridSpec& spec);
Vector grid_point(const GridSpec& spec, std::int64_t index);

/// Objective callback; return +inf to reject a point (infeasible / outside
/// the domain).
using GridFn = std::function<double(const Vector&)>;

struct GridBest {
  double value = std::numeric_limits<double>::infinity();
  std::int64_t index = -1;  // -1: no accepted point
  Vector point;
  std::int64_t evaluated = 0;

  bool found() const { return index >= 0; }
};

/// Serial reference scan. Ties break toward the lowest linear index, so the
/// result is a pure function of the spec and callback.
GridBest grid_scan_serial(const GridSpec& spec, const GridFn& fn);

/// OpenMP kernel. Thread-local bests merge under the same
/// (value, lowest-index) order as the serial reference, so both entry points
/// return identical results for any thread count.
GridBest grid_scan_parallel(const GridSpec& spec, const GridFn& fn);

GridBest grid_scan(const GridSpec& spec, const GridFn& fn, bool parallel);

}  // namespace gaugekit
