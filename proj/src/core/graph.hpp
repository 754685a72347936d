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

#ifndef DIRRICCI_CORE_GRAPH_HPP
#define DIRRICCI_CORE_GRAPH_HPP

#include <cstdint>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

namespace dirricci {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Hop count; kUnreachable marks "no directed path".
using Distance = std::int64_t;
inline constexpr Distance kUnreachable = -1;

// How the plain degree d_v is counted.
//   kUnion: d_v = |in(v) u out(v)|; graphs with an anti-parallel pair
//           (u,v),(v,u) are rejected at build time, so d = d_in + d_out.
//   kSplit: d_v := d_in + d_out; anti-parallel pairs are admitted.
// The walk measure at v places total mass 1 only when d_v = d_in + d_out,
// which kUnion guarantees by validation and kSplit by definition.
enum class DegreeConvention { kUnion, kSplit };

struct DegreeTriple {
  std::uint32_t degree = 0;      // d
  std::uint32_t in_degree = 0;   // d_in
  std::uint32_t out_degree = 0;  // d_out

  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

// Immutable simple digraph with sorted out- and in-adjacency.
class DirectedGraph {
 public:
  // Validates simpleness (no loops, no duplicates), vertex range, and,
  // under kUnion, absence of anti-parallel pairs.
  static DirectedGraph build(VertexId num_vertices, std::vector<Edge> edges,
                             DegreeConvention convention =
                                 DegreeConvention::kUnion);

  VertexId vertex_count() const { return num_vertices_; }
  std::size_t edge_count() const { return num_edges_; }
  DegreeConvention convention() const { return convention_; }

  std::span<const VertexId> out_neighbors(VertexId v) const;
  std::span<const VertexId> in_neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  const DegreeTriple& degree_triple(VertexId v) const;

  // All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

 private:
  DirectedGraph() = default;
  void check_vertex(VertexId v) const;

  VertexId num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  DegreeConvention convention_ = DegreeConvention::kUnion;
  std::vector<std::vector<VertexId>> out_adj_;
  std::vector<std::vector<VertexId>> in_adj_;
  std::vector<DegreeTriple> degrees_;
};

// BFS hop counts from `source` along edge directions; kUnreachable where no
// directed path exists.
std::vector<Distance> shortest_distances(const DirectedGraph& graph,
                                         VertexId source);

// True iff every ordered pair of vertices is joined by a directed path.
bool is_strongly_connected(const DirectedGraph& graph);

// Lazily computed, memoized all-pairs distances. Row computation is
// internally synchronized; rows are immutable once published, so concurrent
// readers may hold the returned references across calls.
class DistanceCache {
 public:
  explicit DistanceCache(const DirectedGraph& graph);
  // The cache borrows the graph; a temporary would dangle.
  explicit DistanceCache(DirectedGraph&&) = delete;

  Distance operator()(VertexId from, VertexId to) const;
  const std::vector<Distance>& row(VertexId from) const;
  void precompute_all() const;

  const DirectedGraph& graph() const { return *graph_; }

 private:
  const DirectedGraph* graph_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<Distance>> rows_;
  mutable std::vector<bool> ready_;
};

// Partition of out(y) by distance from x: bucket k holds the out-neighbors
// at distance d(x,y) - k, `plus` those at distance d(x,y) + 1. The triangle
// inequality through y leaves no other value, so buckets + plus = out(y).
struct GammaDecomposition {
  std::vector<std::vector<VertexId>> buckets;  // index k in 0..d(x,y)
  std::vector<VertexId> plus;
};

GammaDecomposition gamma_decomposition(const DistanceCache& distances,
                                       VertexId x, VertexId y);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_GRAPH_HPP
