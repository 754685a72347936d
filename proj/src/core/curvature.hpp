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

#ifndef DIRRICCI_CORE_CURVATURE_HPP
#define DIRRICCI_CORE_CURVATURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/scalar.hpp"
#include "core/transport.hpp"

namespace dirricci {

// kappa_alpha(x, y) = 1 - W(m_x^a, m_y^a) / d(x, y), exact.
Rational alpha_ricci(const DistanceCache& distances, VertexId x, VertexId y,
                     const Rational& alpha);

// The alpha -> 1 limit of kappa_alpha / (1 - alpha), computed exactly by a
// single transport solve at alpha = 1 - eps: with W = d(x,y) + B eps the
// limit equals -B / d(x,y). No extrapolation is involved.
Rational ricci(const DistanceCache& distances, VertexId x, VertexId y);

// Cross-check for ricci(): evaluates h(a_k) = kappa_{a_k} / (1 - a_k) at
// a_k = 1 - 2^-k, k = 3, 4, ..., asserts h nondecreasing, and returns the
// first value attained twice in a row together with the rung trace. Fails
// with kLadderNotStabilized after k = 24; the infinitesimal solve remains
// authoritative either way.
struct LadderRung {
  int k;
  Rational alpha;
  Rational h;
};
struct LadderResult {
  Rational value;
  std::vector<LadderRung> trace;
};
LadderResult ricci_ladder(const DistanceCache& distances, VertexId x,
                          VertexId y);

// Exact upper bound on ricci(x, y):
//   [ (1/d_y)(sum_k k |G_x^k(y)| - |G_x^+(y)|) + d_x^out/d_x ] / d(x, y)
// with the sum over the full bucket range 1..d(x,y). Obtained by testing
// the coupling against the potential f = -d(x, .).
Rational curvature_upper_bound(const DistanceCache& distances, VertexId x,
                               VertexId y);

struct CurvatureReport {
  std::vector<std::pair<Edge, Rational>> per_edge;  // ascending edge order
  Rational min;
  Rational max;
  bool is_constant = false;
  std::optional<Rational> constant_value;
  bool is_ricci_flat = false;
};

// ricci() on every edge. Requires strong connectivity; edge solves fan out
// across threads and merge in sorted edge order.
CurvatureReport curvature_report(const DistanceCache& distances);

// Structural conditions attached to the Ricci-flatness results.
enum class Condition {
  // "A": out-neighborhoods of adjacent vertices are disjoint.
  kDisjointOutNeighborhoods,
  // "EqualOutDegree": all vertices share one out-degree.
  kEqualOutDegree,
  // "MatchingPhi": along every edge (u, v) the out-neighborhoods admit a
  // bijection moving each vertex across a single edge.
  kOutNeighborhoodMatching,
  // "B": for adjacent edges (x, y), (y, z) the only out-neighbor of x that
  // is an in-neighbor of z is y itself.
  kUniqueIntermediary,
};

const char* condition_label(Condition condition);

struct ConditionVerdict {
  Condition condition;
  bool holds = false;
  // Violating tuples; shape depends on the condition (see check_condition).
  std::vector<std::vector<std::uint32_t>> witnesses;
};

// Witness rows: kDisjointOutNeighborhoods -> [x, y, w] with w in both
// out-neighborhoods; kEqualOutDegree -> [v, d_v_out] for vertex 0 and every
// disagreeing vertex; kOutNeighborhoodMatching -> [u, v] for edges without a
// perfect matching; kUniqueIntermediary -> [x, y, z, w] with w != y in
// out(x) n in(z). The matching and intermediary checks require strong
// connectivity.
ConditionVerdict check_condition(const DirectedGraph& graph, Condition which);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_CURVATURE_HPP
