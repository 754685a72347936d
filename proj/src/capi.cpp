// Copyright 2026 The dirricci Authors
//
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

#include "dirricci.h"

#include <cstring>
#include <map>
#include <new>
#include <string>

#include "core/curvature.hpp"
#include "core/error.hpp"
#include "core/families.hpp"
#include "core/graph_io.hpp"
#include "core/measure.hpp"
#include "core/report_io.hpp"
#include "core/scalar.hpp"
#include "core/transport.hpp"
#include "core/verify.hpp"

struct drc_graph {
  explicit drc_graph(dirricci::DirectedGraph g)
      : graph(std::move(g)), distances(graph) {}

  dirricci::DirectedGraph graph;
  dirricci::DistanceCache distances;
};

namespace {

thread_local std::string t_last_error;

drc_status map_code(dirricci::ErrorCode code) {
  using dirricci::ErrorCode;
  switch (code) {
    case ErrorCode::kLoopEdge: return DRC_ERR_LOOP_EDGE;
    case ErrorCode::kDuplicateEdge: return DRC_ERR_DUPLICATE_EDGE;
    case ErrorCode::kVertexOutOfRange: return DRC_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::kAntiParallelPair: return DRC_ERR_ANTI_PARALLEL_PAIR;
    case ErrorCode::kAlphaOutOfRange: return DRC_ERR_ALPHA_OUT_OF_RANGE;
    case ErrorCode::kDegreeConventionViolated:
      return DRC_ERR_DEGREE_CONVENTION_VIOLATED;
    case ErrorCode::kMassMismatch: return DRC_ERR_MASS_MISMATCH;
    case ErrorCode::kInfiniteRequiredDistance:
      return DRC_ERR_INFINITE_REQUIRED_DISTANCE;
    case ErrorCode::kLipschitzViolation: return DRC_ERR_LIPSCHITZ_VIOLATION;
    case ErrorCode::kSupportTooLarge: return DRC_ERR_SUPPORT_TOO_LARGE;
    case ErrorCode::kSameVertex: return DRC_ERR_SAME_VERTEX;
    case ErrorCode::kInfiniteDistance: return DRC_ERR_INFINITE_DISTANCE;
    case ErrorCode::kNotStronglyConnected:
      return DRC_ERR_NOT_STRONGLY_CONNECTED;
    case ErrorCode::kLadderNotStabilized:
      return DRC_ERR_LADDER_NOT_STABILIZED;
    case ErrorCode::kNTooSmall: return DRC_ERR_N_TOO_SMALL;
    case ErrorCode::kCyclicParentMap: return DRC_ERR_CYCLIC_PARENT_MAP;
    case ErrorCode::kEmptyOffsets: return DRC_ERR_EMPTY_OFFSETS;
    case ErrorCode::kAntiParallelOffsets:
      return DRC_ERR_ANTI_PARALLEL_OFFSETS;
    case ErrorCode::kParseError: return DRC_ERR_PARSE;
    case ErrorCode::kInvalidArgument: return DRC_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIoError: return DRC_ERR_IO;
  }
  return DRC_ERR_INTERNAL;
}

template <typename Fn>
drc_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return DRC_OK;
  } catch (const dirricci::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return DRC_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new (std::nothrow) char[text.size() + 1];
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

drc_status require(bool ok, const char* what) {
  if (!ok) {
    t_last_error = std::string("null argument: ") + what;
    return DRC_ERR_NULL_ARGUMENT;
  }
  return DRC_OK;
}

dirricci::DegreeConvention convention_of(int split_degrees) {
  return split_degrees != 0 ? dirricci::DegreeConvention::kSplit
                            : dirricci::DegreeConvention::kUnion;
}

drc_status emit_graph(dirricci::DirectedGraph graph, drc_graph** out_graph) {
  *out_graph = new drc_graph(std::move(graph));
  return DRC_OK;
}

// alpha: "limit" or an exact rational in [0, 1].
dirricci::Scalar parse_alpha(const char* alpha) {
  if (alpha == nullptr || std::strcmp(alpha, "limit") == 0) {
    return dirricci::one_minus_epsilon();
  }
  dirricci::Rational value = dirricci::parse_rational(alpha);
  if (value < 0 || value > 1) {
    throw dirricci::Error(dirricci::ErrorCode::kAlphaOutOfRange,
                          "alpha must lie in [0, 1], got " +
                              dirricci::rational_to_string(value));
  }
  return dirricci::Scalar(value);
}

bool is_limit(const char* alpha) {
  return alpha == nullptr || std::strcmp(alpha, "limit") == 0;
}

}  // namespace

extern "C" {

drc_status drc_graph_build(uint32_t num_vertices, const uint32_t* edge_pairs,
                           size_t num_edges, int split_degrees,
                           drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  if (auto s = require(edge_pairs != nullptr || num_edges == 0, "edge_pairs");
      s != DRC_OK)
    return s;
  return guarded([&] {
    std::vector<dirricci::Edge> edges;
    edges.reserve(num_edges);
    for (size_t i = 0; i < num_edges; ++i) {
      edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
    }
    emit_graph(dirricci::DirectedGraph::build(num_vertices, std::move(edges),
                                              convention_of(split_degrees)),
               out_graph);
  });
}

drc_status drc_graph_load(const char* path, const char* format,
                          int split_degrees, drc_graph** out_graph) {
  if (auto s = require(path != nullptr, "path"); s != DRC_OK) return s;
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::GraphFileFormat fmt =
        format == nullptr ? dirricci::format_from_path(path)
                          : dirricci::parse_format_name(format);
    emit_graph(dirricci::load_graph_file(path, fmt,
                                         convention_of(split_degrees)),
               out_graph);
  });
}

drc_status drc_graph_parse(const char* text, const char* format,
                           int split_degrees, drc_graph** out_graph) {
  if (auto s = require(text != nullptr, "text"); s != DRC_OK) return s;
  if (auto s = require(format != nullptr, "format"); s != DRC_OK) return s;
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  return guarded([&] {
    emit_graph(dirricci::parse_graph(text, dirricci::parse_format_name(format),
                                     convention_of(split_degrees)),
               out_graph);
  });
}

drc_status drc_gen_cycle(uint32_t n, drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  return guarded([&] { emit_graph(dirricci::directed_cycle(n), out_graph); });
}

drc_status drc_gen_complete(uint32_t n, drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  return guarded(
      [&] { emit_graph(dirricci::oriented_complete(n), out_graph); });
}

drc_status drc_gen_cycle_product(uint32_t g, uint32_t h,
                                 drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  return guarded(
      [&] { emit_graph(dirricci::cycle_product(g, h), out_graph); });
}

drc_status drc_gen_circulant(uint32_t n, const uint32_t* offsets,
                             size_t num_offsets, drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  if (auto s = require(offsets != nullptr || num_offsets == 0, "offsets");
      s != DRC_OK)
    return s;
  return guarded([&] {
    std::vector<uint32_t> offs(offsets, offsets + num_offsets);
    emit_graph(dirricci::circulant(n, offs), out_graph);
  });
}

drc_status drc_gen_in_tree(uint32_t root, const uint32_t* child_parent_pairs,
                           size_t num_pairs, drc_graph** out_graph) {
  if (auto s = require(out_graph != nullptr, "out_graph"); s != DRC_OK)
    return s;
  if (auto s = require(child_parent_pairs != nullptr || num_pairs == 0,
                       "child_parent_pairs");
      s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::TreeSpec spec;
    spec.root = root;
    for (size_t i = 0; i < num_pairs; ++i) {
      uint32_t child = child_parent_pairs[2 * i];
      if (spec.parent.count(child) > 0) {
        throw dirricci::Error(dirricci::ErrorCode::kCyclicParentMap,
                              "vertex " + std::to_string(child) +
                                  " listed with two parents");
      }
      spec.parent[child] = child_parent_pairs[2 * i + 1];
    }
    emit_graph(dirricci::rooted_in_tree(spec), out_graph);
  });
}

void drc_graph_free(drc_graph* graph) { delete graph; }

uint32_t drc_graph_vertex_count(const drc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.vertex_count();
}

uint64_t drc_graph_edge_count(const drc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

drc_status drc_graph_degree(const drc_graph* graph, uint32_t vertex,
                            uint32_t* out_degree_total, uint32_t* out_in,
                            uint32_t* out_out) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  return guarded([&] {
    const dirricci::DegreeTriple& t = graph->graph.degree_triple(vertex);
    if (out_degree_total != nullptr) *out_degree_total = t.degree;
    if (out_in != nullptr) *out_in = t.in_degree;
    if (out_out != nullptr) *out_out = t.out_degree;
  });
}

int drc_graph_strongly_connected(const drc_graph* graph) {
  if (graph == nullptr) return -1;
  return dirricci::is_strongly_connected(graph->graph) ? 1 : 0;
}

drc_status drc_distance(const drc_graph* graph, uint32_t from, uint32_t to,
                        int64_t* out_distance) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_distance != nullptr, "out_distance"); s != DRC_OK)
    return s;
  return guarded([&] { *out_distance = graph->distances(from, to); });
}

drc_status drc_graph_format(const drc_graph* graph, const char* format,
                            char** out_text) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(format != nullptr, "format"); s != DRC_OK) return s;
  if (auto s = require(out_text != nullptr, "out_text"); s != DRC_OK)
    return s;
  return guarded([&] {
    *out_text = copy_string(dirricci::serialize_graph(
        graph->graph, dirricci::parse_format_name(format)));
  });
}

drc_status drc_graph_save(const drc_graph* graph, const char* path,
                          const char* format) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(path != nullptr, "path"); s != DRC_OK) return s;
  return guarded([&] {
    dirricci::GraphFileFormat fmt =
        format == nullptr ? dirricci::format_from_path(path)
                          : dirricci::parse_format_name(format);
    dirricci::save_graph_file(graph->graph, path, fmt);
  });
}

drc_status drc_measure_json(const drc_graph* graph, uint32_t x,
                            const char* alpha, char** out_json) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_json != nullptr, "out_json"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::SparseMeasure m =
        dirricci::build_walk_measure(graph->graph, x, parse_alpha(alpha));
    *out_json = copy_string(dirricci::measure_to_json(m).dump(2));
  });
}

drc_status drc_wasserstein_json(const drc_graph* graph, uint32_t x,
                                uint32_t y, const char* alpha,
                                char** out_json) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_json != nullptr, "out_json"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::Scalar a = parse_alpha(alpha);
    dirricci::SparseMeasure mu =
        dirricci::build_walk_measure(graph->graph, x, a);
    dirricci::SparseMeasure nu =
        dirricci::build_walk_measure(graph->graph, y, a);
    const dirricci::DistanceCache& cache = graph->distances;
    dirricci::TransportResult result = dirricci::wasserstein(
        mu, nu,
        [&cache](dirricci::VertexId u, dirricci::VertexId v) {
          return cache(u, v);
        });
    *out_json = copy_string(dirricci::transport_to_json(result).dump(2));
  });
}

drc_status drc_curvature(const drc_graph* graph, uint32_t x, uint32_t y,
                         const char* alpha, char** out_value) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_value != nullptr, "out_value"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::Rational kappa;
    if (is_limit(alpha)) {
      kappa = dirricci::ricci(graph->distances, x, y);
    } else {
      dirricci::Scalar a = parse_alpha(alpha);
      kappa = dirricci::alpha_ricci(graph->distances, x, y,
                                    a.constant_part());
    }
    *out_value = copy_string(dirricci::rational_to_string(kappa));
  });
}

drc_status drc_curvature_bound(const drc_graph* graph, uint32_t x, uint32_t y,
                               char** out_value) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_value != nullptr, "out_value"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::Rational bound =
        dirricci::curvature_upper_bound(graph->distances, x, y);
    *out_value = copy_string(dirricci::rational_to_string(bound));
  });
}

drc_status drc_ricci_ladder_json(const drc_graph* graph, uint32_t x,
                                 uint32_t y, char** out_json) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(out_json != nullptr, "out_json"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::LadderResult ladder =
        dirricci::ricci_ladder(graph->distances, x, y);
    nlohmann::json rungs = nlohmann::json::array();
    for (const auto& rung : ladder.trace) {
      rungs.push_back({{"k", rung.k},
                       {"alpha", dirricci::rational_to_string(rung.alpha)},
                       {"h", dirricci::rational_to_string(rung.h)}});
    }
    nlohmann::json doc;
    doc["value"] = dirricci::rational_to_string(ladder.value);
    doc["rungs"] = std::move(rungs);
    *out_json = copy_string(doc.dump(2));
  });
}

drc_status drc_curvature_report(const drc_graph* graph, const char* alpha,
                                const char* format, char** out_text) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(format != nullptr, "format"); s != DRC_OK) return s;
  if (auto s = require(out_text != nullptr, "out_text"); s != DRC_OK)
    return s;
  return guarded([&] {
    dirricci::CurvatureReport report;
    if (is_limit(alpha)) {
      report = dirricci::curvature_report(graph->distances);
    } else {
      // Same layout with kappa_alpha values on each edge.
      dirricci::Scalar a = parse_alpha(alpha);
      if (!dirricci::is_strongly_connected(graph->graph)) {
        throw dirricci::Error(
            dirricci::ErrorCode::kNotStronglyConnected,
            "whole-graph curvature requires strong connectivity");
      }
      report.per_edge.clear();
      for (const auto& edge : graph->graph.edges()) {
        report.per_edge.emplace_back(
            edge, dirricci::alpha_ricci(graph->distances, edge.first,
                                        edge.second, a.constant_part()));
      }
      if (!report.per_edge.empty()) {
        report.min = report.per_edge.front().second;
        report.max = report.min;
        for (const auto& [e, k] : report.per_edge) {
          report.min = std::min(report.min, k);
          report.max = std::max(report.max, k);
        }
        report.is_constant = report.min == report.max;
        if (report.is_constant) report.constant_value = report.min;
        report.is_ricci_flat = report.is_constant && report.min == 0;
      }
    }
    std::string text;
    if (std::strcmp(format, "csv") == 0) {
      text = dirricci::report_to_csv(report);
    } else if (std::strcmp(format, "json") == 0) {
      text = dirricci::report_to_json(report).dump(2);
    } else {
      throw dirricci::Error(dirricci::ErrorCode::kInvalidArgument,
                            "report format must be csv or json, got '" +
                                std::string(format) + "'");
    }
    *out_text = copy_string(text);
  });
}

drc_status drc_check_condition_json(const drc_graph* graph,
                                    const char* condition, char** out_json) {
  if (auto s = require(graph != nullptr, "graph"); s != DRC_OK) return s;
  if (auto s = require(condition != nullptr, "condition"); s != DRC_OK)
    return s;
  if (auto s = require(out_json != nullptr, "out_json"); s != DRC_OK)
    return s;
  return guarded([&] {
    std::string which(condition);
    nlohmann::json doc;
    if (which == "flat") {
      doc = dirricci::flatness_to_json(
          dirricci::curvature_report(graph->distances));
    } else {
      dirricci::Condition cond;
      if (which == "a") {
        cond = dirricci::Condition::kDisjointOutNeighborhoods;
      } else if (which == "outdeg") {
        cond = dirricci::Condition::kEqualOutDegree;
      } else if (which == "phi") {
        cond = dirricci::Condition::kOutNeighborhoodMatching;
      } else if (which == "b") {
        cond = dirricci::Condition::kUniqueIntermediary;
      } else {
        throw dirricci::Error(dirricci::ErrorCode::kInvalidArgument,
                              "condition must be a, outdeg, phi, b, or flat; "
                              "got '" + which + "'");
      }
      doc = dirricci::verdict_to_json(
          dirricci::check_condition(graph->graph, cond));
    }
    *out_json = copy_string(doc.dump(2));
  });
}

drc_status drc_verify(char** out_report, int* out_failures,
                      int* out_warnings) {
  if (auto s = require(out_report != nullptr, "out_report"); s != DRC_OK)
    return s;
  return guarded([&] {
    std::vector<dirricci::FixtureResult> results =
        dirricci::run_builtin_fixtures();
    int failures = 0, warnings = 0;
    for (const auto& r : results) {
      if (r.status == dirricci::FixtureResult::Status::kFail) ++failures;
      if (r.status == dirricci::FixtureResult::Status::kWarn) ++warnings;
    }
    if (out_failures != nullptr) *out_failures = failures;
    if (out_warnings != nullptr) *out_warnings = warnings;
    *out_report = copy_string(dirricci::fixtures_to_text(results));
  });
}

const char* drc_last_error(void) { return t_last_error.c_str(); }

const char* drc_status_name(drc_status status) {
  switch (status) {
    case DRC_OK: return "OK";
    case DRC_ERR_LOOP_EDGE: return "LoopEdge";
    case DRC_ERR_DUPLICATE_EDGE: return "DuplicateEdge";
    case DRC_ERR_VERTEX_OUT_OF_RANGE: return "VertexOutOfRange";
    case DRC_ERR_ANTI_PARALLEL_PAIR: return "AntiParallelPair";
    case DRC_ERR_ALPHA_OUT_OF_RANGE: return "AlphaOutOfRange";
    case DRC_ERR_DEGREE_CONVENTION_VIOLATED:
      return "DegreeConventionViolated";
    case DRC_ERR_MASS_MISMATCH: return "MassMismatch";
    case DRC_ERR_INFINITE_REQUIRED_DISTANCE:
      return "InfiniteRequiredDistance";
    case DRC_ERR_LIPSCHITZ_VIOLATION: return "LipschitzViolation";
    case DRC_ERR_SUPPORT_TOO_LARGE: return "SupportTooLarge";
    case DRC_ERR_SAME_VERTEX: return "SameVertex";
    case DRC_ERR_INFINITE_DISTANCE: return "InfiniteDistance";
    case DRC_ERR_NOT_STRONGLY_CONNECTED: return "NotStronglyConnected";
    case DRC_ERR_LADDER_NOT_STABILIZED: return "LadderNotStabilized";
    case DRC_ERR_N_TOO_SMALL: return "NTooSmall";
    case DRC_ERR_CYCLIC_PARENT_MAP: return "CyclicParentMap";
    case DRC_ERR_EMPTY_OFFSETS: return "EmptyOffsets";
    case DRC_ERR_ANTI_PARALLEL_OFFSETS: return "AntiParallelOffsets";
    case DRC_ERR_PARSE: return "ParseError";
    case DRC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DRC_ERR_IO: return "IoError";
    case DRC_ERR_NULL_ARGUMENT: return "NullArgument";
    case DRC_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

int drc_status_is_undefined(drc_status status) {
  switch (status) {
    case DRC_ERR_INFINITE_DISTANCE:
    case DRC_ERR_INFINITE_REQUIRED_DISTANCE:
    case DRC_ERR_NOT_STRONGLY_CONNECTED:
      return 1;
    default:
      return 0;
  }
}

void drc_string_free(char* text) { delete[] text; }

}  // extern "C"
