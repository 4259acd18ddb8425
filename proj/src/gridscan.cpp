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

#include "gaugekit/gridscan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

#include "gaugekit/errors.hpp"

namespace gaugekit {

std::int64_t grid_size(const GridSpec& spec) {
  std::int64_t total = 1;
  for (int i = 0; i < spec.dims(); ++i) total *= spec.steps;
  return total;
}

Vector grid_point(const GridSpec& spec, std::int64_t index) {
  const int d = spec.dims();
  Vector x(d);
  for (int i = 0; i < d; ++i) {
    const std::int64_t digit = index % spec.steps;
    index /= spec.steps;
    x(i) = spec.steps == 1
               ? spec.lo(i)
               : spec.lo(i) + (spec.hi(i) - spec.lo(i)) *
                                  (static_cast<double>(digit) / (spec.steps - 1));
  }
  return x;
}

namespace {

inline void consider(GridBest& best, double value, std::int64_t index,
                     const Vector& point) {
  if (best.index < 0 || value < best.value ||
      (value == best.value && index < best.index)) {
    best.value = value;
    best.index = index;
    best.point = point;
  }
}

}  // namespace

GridBest grid_scan_serial(const GridSpec& spec, const GridFn& fn) {
  require(spec.steps >= 1, ErrorCode::InvalidArgument, "grid: steps >= 1");
  const std::int64_t total = grid_size(spec);
  GridBest best;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    Vector x = grid_point(spec, idx);
    const double v = fn(x);
    ++best.evaluated;
    if (std::isfinite(v)) consider(best, v, idx, x);
  }
  return best;
}

GridBest grid_scan_parallel(const GridSpec& spec, const GridFn& fn) {
  require(spec.steps >= 1, ErrorCode::InvalidArgument, "grid: steps >= 1");
  const std::int64_t total = grid_size(spec);
#ifndef _OPENMP
  return grid_scan_serial(spec, fn);
#else
  const int nthreads = omp_get_max_threads();
  std::vector<GridBest> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    GridBest& mine = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      Vector x = grid_point(spec, idx);
      const double v = fn(x);
      ++mine.evaluated;
      if (std::isfinite(v)) consider(mine, v, idx, x);
    }
  }
  GridBest best;
  for (const GridBest& loc : locals) {
    best.evaluated += loc.evaluated;
    if (loc.index >= 0) consider(best, loc.value, loc.index, loc.point);
  }
  return best;
#endif
}

GridBest grid_scan(const GridSpec& spec, const GridFn& fn, bool parallel) {
  return parallel ? grid_scan_parallel(spec, fn) : grid_scan_serial(spec, fn);
}

}  // namespace gaugekit
