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

#include "gaugekit/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "gaugekit/errors.hpp"

namespace gaugekit {

namespace {

[[noreturn]] void schema_fail(const std::string& what) {
  fail(ErrorCode::SchemaError, what);
}

double number_field(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  schema_fail("expected a number (or \"inf\")");
}

Json number_or_inf(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? Json("inf") : Json("-inf");
}

Vector vector_field(const Json& j, int expected, const std::string& name) {
  if (j.is_null()) {
    if (expected == 0) return Vector(0);
    schema_fail(name + ": missing array of length " + std::to_string(expected));
  }
  if (!j.is_array()) schema_fail(name + ": expected an array");
  if (expected >= 0 && static_cast<int>(j.size()) != expected) {
    schema_fail(name + ": expected length " + std::to_string(expected) +
                ", got " + std::to_string(j.size()));
  }
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(i) = number_field(j[i]);
  return v;
}

// Row-major flat arrays for the problem matrices.
Matrix matrix_field(const Json& j, int rows, int cols, const std::string& name) {
  if (j.is_null()) return Matrix::Zero(rows, cols);
  if (!j.is_array()) schema_fail(name + ": expected a row-major flat array");
  if (static_cast<int>(j.size()) != rows * cols) {
    schema_fail(name + ": expected " + std::to_string(rows * cols) +
                " entries (" + std::to_string(rows) + "x" + std::to_string(cols) +
                " row-major), got " + std::to_string(j.size()));
  }
  Matrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) M(r, c) = number_field(j[r * cols + c]);
  return M;
}

Json matrix_to_json(const Matrix& M) {
  Json arr = Json::array();
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) arr.push_back(M(r, c));
  return arr;
}

// Nested row lists for per-gauge matrices (generator sets, halfspaces, Q).
Matrix rows_field(const Json& j, int cols, const std::string& name) {
  if (!j.is_array() || j.empty()) schema_fail(name + ": expected a list of rows");
  Matrix M(j.size(), cols >= 0 ? cols : static_cast<int>(j[0].size()));
  for (size_t r = 0; r < j.size(); ++r) {
    Vector row = vector_field(j[r], static_cast<int>(M.cols()), name);
    M.row(r) = row.transpose();
  }
  return M;
}

Json rows_to_json(const Matrix& M) {
  Json arr = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const Json& j) { return vector_field(j, -1, "vector"); }

Json gauge_to_json(const GaugeSpec& g) {
  return std::visit(
      [&](const auto& spec) -> Json {
        using T = std::decay_t<decltype(spec)>;
        Json out;
        if constexpr (std::is_same_v<T, PNorm>) {
          out["family"] = "pnorm";
          out["p"] = number_or_inf(spec.p);
        } else if constexpr (std::is_same_v<T, WeightedPNorm>) {
          out["family"] = "weighted_pnorm";
          out["p"] = number_or_inf(spec.p);
          out["w"] = vector_to_json(spec.w);
        } else if constexpr (std::is_same_v<T, ScaledGauge>) {
          out["family"] = "scaled";
          out["alpha"] = spec.factor;
          out["inner"] = gauge_to_json(*spec.inner);
        } else if constexpr (std::is_same_v<T, PolyhedralGauge>) {
          out["family"] = "polyhedral";
          out["generators"] = rows_to_json(spec.generators);
        } else if constexpr (std::is_same_v<T, ConeIndicator>) {
          out["family"] = "cone";
          switch (spec.rep) {
            case ConeIndicator::Rep::Orthant:
              out["cone"] = "orthant";
              break;
            case ConeIndicator::Rep::Halfspaces:
              out["cone"] = Json{{"halfspaces", rows_to_json(spec.M)}};
              break;
            case ConeIndicator::Rep::Generated:
              out["cone"] = Json{{"generators", rows_to_json(spec.M)}};
              break;
          }
        } else if constexpr (std::is_same_v<T, PerspectiveWrap>) {
          out["family"] = "perspective";
          out["convex"] = convex_to_json(*spec.h);
        }
        return out;
      },
      g.fn);
}

GaugeSpec gauge_from_json(const Json& j, int dim) {
  if (!j.is_object() || !j.contains("family"))
    schema_fail("gauge: expected an object with a \"family\" tag");
  const std::string family = j.at("family").get<std::string>();
  if (family == "pnorm") return make_pnorm(number_field(j.at("p")), dim);
  if (family == "weighted_pnorm") {
    return make_weighted_pnorm(number_field(j.at("p")),
                               vector_field(j.at("w"), dim, "w"));
  }
  if (family == "scaled") {
    return make_scaled(number_field(j.at("alpha")),
                       gauge_from_json(j.at("inner"), dim));
  }
  if (family == "polyhedral") {
    return make_polyhedral(rows_field(j.at("generators"), dim, "generators"));
  }
  if (family == "cone") {
    const Json& cone = j.at("cone");
    if (cone.is_string() && cone.get<std::string>() == "orthant")
      return make_orthant_indicator(dim);
    if (cone.is_object() && cone.contains("halfspaces"))
      return make_halfspace_cone_indicator(
          rows_field(cone.at("halfspaces"), dim, "halfspaces"));
    if (cone.is_object() && cone.contains("generators"))
      return make_generated_cone_indicator(
          rows_field(cone.at("generators"), dim, "generators"));
    schema_fail("cone: expected \"orthant\", {halfspaces}, or {generators}");
  }
  if (family == "perspective") {
    return make_perspective(convex_from_json(j.at("convex"), dim - 1));
  }
  schema_fail("unknown gauge family \"" + family + "\"");
}

Json convex_to_json(const ConvexSpec& f) {
  return std::visit(
      [&](const auto& spec) -> Json {
        using T = std::decay_t<decltype(spec)>;
        Json out;
        if constexpr (std::is_same_v<T, ConvexQuadratic>) {
          out["family"] = "quadratic";
          out["Q"] = rows_to_json(spec.Q);
          out["q"] = vector_to_json(spec.q);
          out["r"] = spec.r;
        } else if constexpr (std::is_same_v<T, AffinePlus>) {
          out["family"] = "affine_plus";
          out["a"] = vector_to_json(spec.a);
          out["r"] = spec.r;
        } else if constexpr (std::is_same_v<T, GaugeWrapped>) {
          out["family"] = "gauge";
          out["gauge"] = gauge_to_json(spec.g);
        } else {
          out["family"] = "gauge_minus_linear";
          out["gauge"] = gauge_to_json(spec.g);
          out["eta"] = vector_to_json(spec.eta);
        }
        return out;
      },
      f.fn);
}

ConvexSpec convex_from_json(const Json& j, int dim) {
  if (!j.is_object() || !j.contains("family"))
    schema_fail("convex: expected an object with a \"family\" tag");
  const std::string family = j.at("family").get<std::string>();
  if (family == "quadratic") {
    return make_quadratic(rows_field(j.at("Q"), dim, "Q"),
                          vector_field(j.at("q"), dim, "q"),
                          number_field(j.at("r")));
  }
  if (family == "affine_plus") {
    return make_affine_plus(vector_field(j.at("a"), dim, "a"),
                            number_field(j.at("r")));
  }
  if (family == "gauge") return make_gauge_wrapped(gauge_from_json(j.at("gauge"), dim));
  if (family == "gauge_minus_linear") {
    return make_gauge_minus_linear(gauge_from_json(j.at("gauge"), dim),
                                   vector_field(j.at("eta"), dim, "eta"));
  }
  schema_fail("unknown convex family \"" + family + "\"");
}

ProblemFile parse_problem_json(const Json& j) {
  try {
    if (!j.is_object()) schema_fail("problem file: expected an object");
    if (!j.contains("version") || j.at("version").get<int>() != 1)
      schema_fail("problem file: unsupported or missing version");
    ProblemFile out;
    out.kind = j.at("kind").get<std::string>();
    if (out.kind != "gauge" && out.kind != "pho" && out.kind != "convex")
      schema_fail("kind must be \"gauge\", \"pho\" or \"convex\"");
    const int n = j.at("n").get<int>();
    const Json& dims = j.at("dims");
    const int k = dims.at("k").get<int>();
    const int l = dims.at("l").get<int>();
    const int m = dims.at("m").get<int>();
    if (n < 1 || k < 0 || l < 0 || m < 1) schema_fail("dims out of range");

    const Json& jblocks = j.at("blocks");
    if (!jblocks.is_array() || static_cast<int>(jblocks.size()) != m)
      schema_fail("blocks: expected m entries");
    std::vector<std::vector<int>> blocks(m);
    for (int i = 0; i < m; ++i) {
      const Json& idx = jblocks[i].at("indices");
      if (!idx.is_array() || idx.empty()) schema_fail("blocks: empty index set");
      for (const auto& e : idx) {
        const int one_based = e.get<int>();
        if (one_based < 1 || one_based > n)
          schema_fail("blocks: index out of range (indices are 1-based)");
        blocks[i].push_back(one_based - 1);
      }
    }
    BlockPartition part;
    try {
      part = make_partition(n, std::move(blocks));
    } catch (const Error& e) {
      schema_fail(e.what());
    }

    Vector c = vector_field(j.contains("c") ? j.at("c") : Json(), n, "c");
    Vector d = vector_field(j.contains("d") ? j.at("d") : Json(), m, "d");
    Vector b = vector_field(j.contains("b") ? j.at("b") : Json(), k, "b");
    Vector p = vector_field(j.contains("p") ? j.at("p") : Json(), l, "p");
    Matrix A = matrix_field(j.contains("A") ? j.at("A") : Json(), k, n, "A");
    Matrix B = matrix_field(j.contains("B") ? j.at("B") : Json(), k, m, "B");
    Matrix H = matrix_field(j.contains("H") ? j.at("H") : Json(), l, n, "H");
    Matrix K = matrix_field(j.contains("K") ? j.at("K") : Json(), l, m, "K");

    if (out.kind == "gauge" && B.size() > 0 && B.cwiseAbs().maxCoeff() != 0.0)
      schema_fail("kind \"gauge\" requires B omitted or all-zero");

    out.objective_offset = j.contains("objective_offset")
                               ? number_field(j.at("objective_offset"))
                               : 0.0;
    if (j.contains("provenance")) out.provenance = j.at("provenance");
    if (!out.provenance.is_null()) {
      if (out.provenance.contains("double_dual_of"))
        out.form = ProblemForm::DoubleDualForm;
      else if (out.provenance.contains("dual_of"))
        out.form = ProblemForm::DualForm;
    }

    if (out.kind == "convex") {
      std::vector<ConvexSpec> funcs;
      for (int i = 0; i < m; ++i) {
        if (!jblocks[i].contains("convex"))
          schema_fail("convex blocks require a \"convex\" member");
        funcs.push_back(convex_from_json(jblocks[i].at("convex"),
                                         part.block_size(i)));
      }
      out.convex = make_convex_problem(c, d, b, p, A, H, K, part,
                                       std::move(funcs), out.objective_offset);
    } else {
      std::vector<GaugeSpec> specs;
      for (int i = 0; i < m; ++i) {
        if (!jblocks[i].contains("gauge"))
          schema_fail("gauge blocks require a \"gauge\" member");
        specs.push_back(gauge_from_json(jblocks[i].at("gauge"),
                                        part.block_size(i)));
      }
      VectorGauge vg = make_vector_gauge(part, std::move(specs));
      out.problem = make_problem(c, d, b, p, A, B, H, K, std::move(vg),
                                 out.kind == "pho"
                                     ? ProblemKind::PositivelyHomogeneous
                                     : ProblemKind::Gauge);
    }
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    schema_fail(e.what());
  }
}

ProblemFile load_problem_file(const std::string& path) {
  return parse_problem_json(read_json_file(path));
}

namespace {

Json problem_common_json(const std::string& kind, int n, int k, int l, int m) {
  Json j;
  j["version"] = 1;
  j["kind"] = kind;
  j["n"] = n;
  j["dims"] = Json{{"k", k}, {"l", l}, {"m", m}};
  return j;
}

Json indices_json(const BlockPartition& part, int i) {
  Json idx = Json::array();
  for (int v : part.blocks[i]) idx.push_back(v + 1);  // files are 1-based
  return idx;
}

}  // namespace

Json problem_to_json(const Problem& prob, double objective_offset,
                     const Json& provenance) {
  Json j = problem_common_json(
      prob.kind == ProblemKind::PositivelyHomogeneous ? "pho" : "gauge",
      prob.n(), prob.k(), prob.l(), prob.m());
  Json blocks = Json::array();
  for (int i = 0; i < prob.m(); ++i) {
    Json b;
    b["indices"] = indices_json(prob.gauge.partition, i);
    b["gauge"] = gauge_to_json(prob.gauge.specs[i]);
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  j["c"] = vector_to_json(prob.c);
  j["d"] = vector_to_json(prob.d);
  j["b"] = vector_to_json(prob.b);
  j["p"] = vector_to_json(prob.p);
  j["A"] = matrix_to_json(prob.A);
  if (prob.kind == ProblemKind::PositivelyHomogeneous)
    j["B"] = matrix_to_json(prob.B);
  j["H"] = matrix_to_json(prob.H);
  j["K"] = matrix_to_json(prob.K);
  if (objective_offset != 0.0) j["objective_offset"] = objective_offset;
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j;
}

Json convex_problem_to_json(const ConvexProblem& pf, const Json& provenance) {
  Json j = problem_common_json("convex", pf.n(), pf.k(), pf.l(), pf.m());
  Json blocks = Json::array();
  for (int i = 0; i < pf.m(); ++i) {
    Json b;
    b["indices"] = indices_json(pf.partition, i);
    b["convex"] = convex_to_json(pf.f[i]);
    blocks.push_back(b);
  }
  j["blocks"] = blocks;
  j["c"] = vector_to_json(pf.c);
  j["d"] = vector_to_json(pf.d);
  j["b"] = vector_to_json(pf.b);
  j["p"] = vector_to_json(pf.p);
  j["A"] = matrix_to_json(pf.A);
  j["H"] = matrix_to_json(pf.H);
  j["K"] = matrix_to_json(pf.K);
  if (pf.objective_offset != 0.0) j["objective_offset"] = pf.objective_offset;
  if (!provenance.is_null()) j["provenance"] = provenance;
  return j;
}

Json dualize_json(const Json& source) {
  ProblemFile pf = parse_problem_json(source);  // validation
  require(pf.kind != "convex", ErrorCode::InvalidArgument,
          "dualize expects a gauge or pho problem; run `perspective` first");
  Json out = source;
  const std::string h = content_hash(source);
  switch (pf.form) {
    case ProblemForm::Primal:
      out["provenance"] = Json{{"dual_of", h}};
      break;
    case ProblemForm::DualForm:
      out["provenance"] = Json{{"double_dual_of", h}};
      break;
    case ProblemForm::DoubleDualForm:
      fail(ErrorCode::InvalidArgument,
           "the file already denotes the epigraph double dual");
  }
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string content_hash(const Json& j) {
  const std::string s = canonical_dump(j);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::InvalidArgument, "cannot open " + path);
  out << canonical_dump(j);
  require(out.good(), ErrorCode::InvalidArgument, "write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) fail(ErrorCode::SchemaError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaError, std::string("JSON parse error: ") + e.what());
  }
}

PointFile parse_point_json(const Json& j) {
  try {
    if (!j.is_object()) schema_fail("point file: expected an object");
    PointFile out;
    if (j.contains("x")) out.x = vector_field(j.at("x"), -1, "x");
    if (j.contains("u")) out.u = vector_field(j.at("u"), -1, "u");
    if (j.contains("v")) out.v = vector_field(j.at("v"), -1, "v");
    if (j.contains("lambda")) out.lambda = vector_field(j.at("lambda"), -1, "lambda");
    if (j.contains("mu")) out.mu = vector_field(j.at("mu"), -1, "mu");
    if (j.contains("x_bar_blocks")) {
      std::vector<Vector> xbs;
      for (const auto& e : j.at("x_bar_blocks"))
        xbs.push_back(vector_field(e, -1, "x_bar_blocks"));
      out.x_bar_blocks = std::move(xbs);
    }
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    schema_fail(e.what());
  }
}

PointFile load_point_file(const std::string& path) {
  return parse_point_json(read_json_file(path));
}

Json feas_to_json(const FeasReport& fr) {
  Json j;
  j["eq_residual"] = number_or_inf(fr.eq_residual);
  j["ineq_violation"] = number_or_inf(fr.ineq_violation);
  j["in_domain"] = fr.in_domain;
  j["feasible"] = fr.feasible;
  return j;
}

Json report_to_json(const OptimalityReport& rep) {
  Json j;
  j["primal_feas"] = feas_to_json(rep.primal_feas);
  j["dual_feas"] = Json{{"feasible", rep.dual_feasible},
                        {"min_slack", number_or_inf(rep.dual_min_slack)},
                        {"v_min", number_or_inf(rep.dual_v_min)}};
  Json cg = Json::array();
  for (int i = 0; i < rep.comp_gauge.size(); ++i)
    cg.push_back(number_or_inf(rep.comp_gauge(i)));
  j["comp_gauge"] = cg;
  Json ci = Json::array();
  for (int i = 0; i < rep.comp_ineq.size(); ++i)
    ci.push_back(number_or_inf(rep.comp_ineq(i)));
  j["comp_ineq"] = ci;
  j["alignment_residual"] = number_or_inf(rep.alignment_residual);
  j["duality_gap"] = number_or_inf(rep.duality_gap);
  j["conditions"] = Json{{"primal_feasibility", rep.cond_primal},
                         {"dual_feasibility", rep.cond_dual},
                         {"complementarity_gauge", rep.cond_comp_gauge},
                         {"complementarity_ineq", rep.cond_comp_ineq},
                         {"alignment", rep.cond_alignment}};
  j["tol"] = rep.tol;
  j["verdict"] = rep.verdict;
  return j;
}

Json kkt_residual_to_json(const KKTResidual& res) {
  Json j;
  j["stationarity_v"] = number_or_inf(res.stationarity_v);
  j["stationarity_u"] = number_or_inf(res.stationarity_u);
  j["comp_constraint"] = number_or_inf(res.comp_constraint);
  j["comp_sign"] = number_or_inf(res.comp_sign);
  j["dual_infeasibility"] = number_or_inf(res.dual_infeasibility);
  j["sign_violation"] = number_or_inf(res.sign_violation);
  return j;
}

Json solve_result_to_json(const SolveResult& res, double objective_offset) {
  Json j;
  j["status"] = to_string(res.status);
  if (res.x.size() > 0) j["x"] = vector_to_json(res.x);
  if (res.dual) {
    j["u"] = vector_to_json(res.dual->u);
    j["v"] = vector_to_json(res.dual->v);
  }
  j["objective"] = res.objective + objective_offset;
  if (objective_offset != 0.0) j["objective_offset"] = objective_offset;
  j["iterations"] = res.iterations;
  j["accuracy"] = number_or_inf(res.accuracy);
  if (res.certificate) j["certificate"] = report_to_json(*res.certificate);
  return j;
}

}  // namespace gaugekit
