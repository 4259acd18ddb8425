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
//
// Benchmark: the serial reference grid scan against the OpenMP kernel, on
// the objective/feasibility evaluation used by the oracle. Also checks that
// both kernels return identical results.

#include <chrono>
#include <cstdio>

#include "gaugekit/gridscan.hpp"
#include "gaugekit/model.hpp"
#include "gaugekit/solve.hpp"
#include "support/instance_gen.hpp"

using namespace gaugekit;

namespace {

double run(const GridSpec& spec, const GridFn& fn, bool parallel,
           GridBest* out) {
  auto t0 = std::chrono::steady_clock::now();
  *out = grid_scan(spec, fn, parallel);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int steps = 121;
  int dims = 3;
  if (argc > 1) steps = std::atoi(argv[1]);
  if (argc > 2) dims = std::atoi(argv[2]);

  // equality-free instance so the raw box scan is the whole search space
  Rng rng(42);
  Vector c = rng.gaussian(dims, 0.5);
  Vector d = Vector::Ones(1) * 1.5;
  Matrix H(1, dims);
  for (int j = 0; j < dims; ++j) H(0, j) = rng.normal();
  Matrix K(1, 1);
  K << 1.0;
  Vector p = Vector::Ones(1) * 2.0;
  VectorGauge vg = make_vector_gauge(
      make_partition(dims, {[&] {
        std::vector<int> all(dims);
        for (int j = 0; j < dims; ++j) all[j] = j;
        return all;
      }()}),
      {make_pnorm(2.0, dims)});
  Problem prob = make_gauge_problem(c, d, Vector(0), p, Matrix(0, dims), H, K,
                                    std::move(vg));

  GridSpec spec{Vector::Constant(dims, -3.0), Vector::Constant(dims, 3.0), steps};
  GridFn fn = [&](const Vector& x) {
    PrimalPoint pt = make_primal_point(prob, x);
    FeasReport fr = primal_feasibility(prob, pt);
    if (!fr.feasible) return std::numeric_limits<double>::infinity();
    return primal_objective(prob, pt).value();
  };

  std::printf("grid: %d^%d = %lld points\n", steps, dims,
              static_cast<long long>(grid_size(spec)));

  GridBest serial_best, parallel_best;
  const double warm = run(spec, fn, false, &serial_best);
  (void)warm;
  const double t_serial = run(spec, fn, false, &serial_best);
  const double t_parallel = run(spec, fn, true, &parallel_best);

  const bool same = serial_best.index == parallel_best.index &&
                    serial_best.value == parallel_best.value;
  std::printf("serial reference: %8.3f s  (best %.6f at index %lld)\n",
              t_serial, serial_best.value,
              static_cast<long long>(serial_best.index));
  std::printf("openmp kernel:    %8.3f s  (best %.6f at index %lld)\n",
              t_parallel, parallel_best.value,
              static_cast<long long>(parallel_best.index));
  std::printf("speedup: %.2fx, results %s\n", t_serial / t_parallel,
              same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
