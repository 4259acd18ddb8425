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

#include <optional>
#include <string>

#include <json.hpp>

#include "gaugekit/certify.hpp"
#include "gaugekit/model.hpp"
#include "gaugekit/perspective.hpp"
#include "gaugekit/recover.hpp"
#include "gaugekit/solve.hpp"

namespace gaugekit {

/// Insertion-ordered JSON: emission order is fixed by construction order, so
/// identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// How a problem file is to be interpreted.
///  - Primal: the data is the problem itself.
///  - DualForm: the data is the source problem's data; the file denotes its
///    dual  max b^T u - p^T v  s.t.  G°(A^T u - H^T v - c) + B^T u - K^T v <= d,
///    v >= 0  (provenance.dual_of present).
///  - DoubleDualForm: the data denotes the epigraph lift of the source
///    problem (provenance.double_dual_of present).
enum class ProblemForm { Primal, DualForm, DoubleDualForm };

struct ProblemFile {
  ProblemForm form = ProblemForm::Primal;
  std::string kind;  // "gauge" | "pho" | "convex"
  std::optional<Problem> problem;
  std::optional<ConvexProblem> convex;
  double objective_offset = 0.0;
  Json provenance;  // null when absent
};

ProblemFile parse_problem_json(const Json& j);
ProblemFile load_problem_file(const std::string& path);

Json problem_to_json(const Problem& prob, double objective_offset = 0.0,
                     const Json& provenance = Json());
Json convex_problem_to_json(const ConvexProblem& pf,
                            const Json& provenance = Json());

/// Emits the same data with dual (or double-dual) provenance; the round trip
/// dualize(dualize(P)) flags the epigraph form.
Json dualize_json(const Json& source);

std::string canonical_dump(const Json& j);
std::string content_hash(const Json& j);  // FNV-1a 64 over the canonical bytes
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

struct PointFile {
  std::optional<Vector> x;
  std::optional<Vector> u;
  std::optional<Vector> v;
  std::optional<Vector> lambda;
  std::optional<Vector> mu;
  std::optional<std::vector<Vector>> x_bar_blocks;
};

PointFile parse_point_json(const Json& j);
PointFile load_point_file(const std::string& path);

Json gauge_to_json(const GaugeSpec& g);
GaugeSpec gauge_from_json(const Json& j, int dim);
Json convex_to_json(const ConvexSpec& f);
ConvexSpec convex_from_json(const Json& j, int dim);

Json feas_to_json(const FeasReport& fr);
Json report_to_json(const OptimalityReport& rep);
Json kkt_residual_to_json(const KKTResidual& res);
Json solve_result_to_json(const SolveResult& res, double objective_offset = 0.0);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

}  // namespace gaugekit
