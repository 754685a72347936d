/* Copyright 2026 The dirricci Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the dirricci shared library: exact Ricci curvature of
 * directed graphs.
 *
 * Graphs live behind the opaque drc_graph handle. Every fallible call
 * returns a drc_status; DRC_OK means success, anything else leaves the
 * outputs untouched and a human-readable message in drc_last_error()
 * (thread-local). Strings returned through char** are allocated by the
 * library and must be released with drc_string_free().
 *
 * Exact rationals cross this interface as "p/q" strings ("1/4", "0", "-2/3").
 * Values carrying an infinitesimal part are rendered "a + b e" / "a - b e".
 * Wherever a parameter is documented as alpha, pass either such a rational
 * in [0, 1] or the string "limit" to request the alpha -> 1 limit.
 */

#ifndef DIRRICCI_H
#define DIRRICCI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct drc_graph drc_graph;

typedef enum drc_status {
  DRC_OK = 0,
  /* graph construction */
  DRC_ERR_LOOP_EDGE,
  DRC_ERR_DUPLICATE_EDGE,
  DRC_ERR_VERTEX_OUT_OF_RANGE,
  DRC_ERR_ANTI_PARALLEL_PAIR,
  /* measures */
  DRC_ERR_ALPHA_OUT_OF_RANGE,
  DRC_ERR_DEGREE_CONVENTION_VIOLATED,
  /* transport */
  DRC_ERR_MASS_MISMATCH,
  DRC_ERR_INFINITE_REQUIRED_DISTANCE,
  DRC_ERR_LIPSCHITZ_VIOLATION,
  DRC_ERR_SUPPORT_TOO_LARGE,
  /* curvature */
  DRC_ERR_SAME_VERTEX,
  DRC_ERR_INFINITE_DISTANCE,
  DRC_ERR_NOT_STRONGLY_CONNECTED,
  DRC_ERR_LADDER_NOT_STABILIZED,
  /* generators */
  DRC_ERR_N_TOO_SMALL,
  DRC_ERR_CYCLIC_PARENT_MAP,
  DRC_ERR_EMPTY_OFFSETS,
  DRC_ERR_ANTI_PARALLEL_OFFSETS,
  /* i/o and misc */
  DRC_ERR_PARSE,
  DRC_ERR_INVALID_ARGUMENT,
  DRC_ERR_IO,
  DRC_ERR_NULL_ARGUMENT,
  DRC_ERR_INTERNAL
} drc_status;

/* --- construction ------------------------------------------------------ */

/* edge_pairs holds 2*num_edges vertex ids: u0, v0, u1, v1, ...
 * split_degrees = 0 counts d = |in u out| and rejects anti-parallel pairs;
 * nonzero redefines d = d_in + d_out and admits them. */
drc_status drc_graph_build(uint32_t num_vertices, const uint32_t* edge_pairs,
                           size_t num_edges, int split_degrees,
                           drc_graph** out_graph);

/* format is "edgelist", "json", "matrix", or NULL to infer from the path
 * extension (.json, .csv, anything else -> edgelist). */
drc_status drc_graph_load(const char* path, const char* format,
                          int split_degrees, drc_graph** out_graph);
drc_status drc_graph_parse(const char* text, const char* format,
                           int split_degrees, drc_graph** out_graph);

drc_status drc_gen_cycle(uint32_t n, drc_graph** out_graph);
drc_status drc_gen_complete(uint32_t n, drc_graph** out_graph);
drc_status drc_gen_cycle_product(uint32_t g, uint32_t h,
                                 drc_graph** out_graph);
drc_status drc_gen_circulant(uint32_t n, const uint32_t* offsets,
                             size_t num_offsets, drc_graph** out_graph);
/* child_parent_pairs holds 2*num_pairs ids: child0, parent0, child1, ...
 * covering every vertex except the root. */
drc_status drc_gen_in_tree(uint32_t root, const uint32_t* child_parent_pairs,
                           size_t num_pairs, drc_graph** out_graph);

void drc_graph_free(drc_graph* graph);

/* --- queries ------------------------------------------------------------ */

uint32_t drc_graph_vertex_count(const drc_graph* graph);
uint64_t drc_graph_edge_count(const drc_graph* graph);
drc_status drc_graph_degree(const drc_graph* graph, uint32_t vertex,
                            uint32_t* out_degree_total, uint32_t* out_in,
                            uint32_t* out_out);
/* 1, 0, or -1 when graph is NULL. */
int drc_graph_strongly_connected(const drc_graph* graph);
/* Hop count along edge directions; -1 when unreachable. */
drc_status drc_distance(const drc_graph* graph, uint32_t from, uint32_t to,
                        int64_t* out_distance);

drc_status drc_graph_format(const drc_graph* graph, const char* format,
                            char** out_text);
drc_status drc_graph_save(const drc_graph* graph, const char* path,
                          const char* format);

/* --- computations ------------------------------------------------------- */

/* JSON array [{"vertex": v, "mass": "p/q"}, ...] of the lazy-walk measure
 * at x. */
drc_status drc_measure_json(const drc_graph* graph, uint32_t x,
                            const char* alpha, char** out_json);

/* JSON object {"value", "coupling": [{"from","to","mass"}...],
 * "potential": [{"vertex","value"}...]} where the potential is a feasible
 * dual certificate matching the value exactly. */
drc_status drc_wasserstein_json(const drc_graph* graph, uint32_t x,
                                uint32_t y, const char* alpha,
                                char** out_json);

/* Exact curvature of the pair: the limit value for alpha = "limit", the
 * alpha-curvature otherwise. Result is a "p/q" string. */
drc_status drc_curvature(const drc_graph* graph, uint32_t x, uint32_t y,
                         const char* alpha, char** out_value);

/* Exact upper bound on the limit curvature of the pair. */
drc_status drc_curvature_bound(const drc_graph* graph, uint32_t x, uint32_t y,
                               char** out_value);

/* JSON {"value", "rungs": [{"k", "alpha", "h"}...]} for the stabilizing
 * sequence h(1 - 2^-k); cross-checks the limit solve. */
drc_status drc_ricci_ladder_json(const drc_graph* graph, uint32_t x,
                                 uint32_t y, char** out_json);

/* Whole-graph per-edge curvature. format "csv" or "json"; alpha as above
 * (NULL means "limit"). Requires strong connectivity. */
drc_status drc_curvature_report(const drc_graph* graph, const char* alpha,
                                const char* format, char** out_text);

/* condition: "a" (adjacent out-neighborhoods disjoint), "outdeg" (equal
 * out-degrees), "phi" (out-neighborhood matchings along edges), "b" (unique
 * intermediary on adjacent edge pairs), or "flat" (every edge curvature 0).
 * Result: JSON {"condition", "holds", "witnesses"}. */
drc_status drc_check_condition_json(const drc_graph* graph,
                                    const char* condition, char** out_json);

/* Runs the built-in fixture suite. Returns DRC_OK even when fixtures fail;
 * inspect out_failures / out_warnings. */
drc_status drc_verify(char** out_report, int* out_failures,
                      int* out_warnings);

/* --- errors and memory --------------------------------------------------- */

/* Message from the most recent failing call on this thread; "" if none. */
const char* drc_last_error(void);
const char* drc_status_name(drc_status status);
/* 1 for statuses meaning "the requested quantity is undefined on this
 * input" (infinite distances, missing strong connectivity), else 0. */
int drc_status_is_undefined(drc_status status);
void drc_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* DIRRICCI_H */
