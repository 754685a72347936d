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

#include "core/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "core/error.hpp"

namespace dirricci {

DirectedGraph DirectedGraph::build(VertexId num_vertices,
                                   std::vector<Edge> edges,
                                   DegreeConvention convention) {
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") exceeds vertex count " + std::to_string(num_vertices));
    }
    if (u == v) {
      throw Error(ErrorCode::kLoopEdge,
                  "loop edge at vertex " + std::to_string(u));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge (" + std::to_string(dup->first) + ", " +
                    std::to_string(dup->second) + ")");
  }
  if (convention == DegreeConvention::kUnion) {
    for (const auto& [u, v] : edges) {
      if (u < v && std::binary_search(edges.begin(), edges.end(),
                                      Edge{v, u})) {
        throw Error(ErrorCode::kAntiParallelPair,
                    "anti-parallel pair between " + std::to_string(u) +
                        " and " + std::to_string(v) +
                        " (use the split degree convention to admit it)");
      }
    }
  }

  DirectedGraph g;
  g.num_vertices_ = num_vertices;
  g.num_edges_ = edges.size();
  g.convention_ = convention;
  g.out_adj_.resize(num_vertices);
  g.in_adj_.resize(num_vertices);
  for (const auto& [u, v] : edges) {
    g.out_adj_[u].push_back(v);
    g.in_adj_[v].push_back(u);
  }
  for (auto& nbrs : g.in_adj_) std::sort(nbrs.begin(), nbrs.end());
  // out_adj_ is already sorted because edges were.

  g.degrees_.resize(num_vertices);
  for (VertexId v = 0; v < num_vertices; ++v) {
    auto& t = g.degrees_[v];
    t.in_degree = static_cast<std::uint32_t>(g.in_adj_[v].size());
    t.out_degree = static_cast<std::uint32_t>(g.out_adj_[v].size());
    if (convention == DegreeConvention::kSplit) {
      t.degree = t.in_degree + t.out_degree;
    } else {
      // |in u out| via merge; equals in + out after the anti-parallel check.
      std::vector<VertexId> all;
      std::set_union(g.in_adj_[v].begin(), g.in_adj_[v].end(),
                     g.out_adj_[v].begin(), g.out_adj_[v].end(),
                     std::back_inserter(all));
      t.degree = static_cast<std::uint32_t>(all.size());
    }
  }
  return g;
}

void DirectedGraph::check_vertex(VertexId v) const {
  if (v >= num_vertices_) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(num_vertices_) + ")");
  }
}

std::span<const VertexId> DirectedGraph::out_neighbors(VertexId v) const {
  check_vertex(v);
  return out_adj_[v];
}

std::span<const VertexId> DirectedGraph::in_neighbors(VertexId v) const {
  check_vertex(v);
  return in_adj_[v];
}

bool DirectedGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(out_adj_[u].begin(), out_adj_[u].end(), v);
}

const DegreeTriple& DirectedGraph::degree_triple(VertexId v) const {
  check_vertex(v);
  return degrees_[v];
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < num_vertices_; ++u) {
    for (VertexId v : out_adj_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::vector<Distance> shortest_distances(const DirectedGraph& graph,
                                         VertexId source) {
  if (source >= graph.vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<Distance> dist(graph.vertex_count(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : graph.out_neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

// Vertices reachable from 0 following either out- or in-adjacency.
std::size_t reachable_count(const DirectedGraph& graph, bool forward) {
  std::vector<bool> seen(graph.vertex_count(), false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    auto nbrs = forward ? graph.out_neighbors(u) : graph.in_neighbors(u);
    for (VertexId v : nbrs) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const DirectedGraph& graph) {
  if (graph.vertex_count() <= 1) return true;
  return reachable_count(graph, true) == graph.vertex_count() &&
         reachable_count(graph, false) == graph.vertex_count();
}

DistanceCache::DistanceCache(const DirectedGraph& graph)
    : graph_(&graph),
      rows_(graph.vertex_count()),
      ready_(graph.vertex_count(), false) {}

const std::vector<Distance>& DistanceCache::row(VertexId from) const {
  if (from >= graph_->vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "distance row " + std::to_string(from) + " out of range");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (!ready_[from]) {
    rows_[from] = shortest_distances(*graph_, from);
    ready_[from] = true;
  }
  return rows_[from];
}

Distance DistanceCache::operator()(VertexId from, VertexId to) const {
  const auto& r = row(from);
  if (to >= r.size()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "distance target " + std::to_string(to) + " out of range");
  }
  return r[to];
}

void DistanceCache::precompute_all() const {
  for (VertexId v = 0; v < graph_->vertex_count(); ++v) row(v);
}

GammaDecomposition gamma_decomposition(const DistanceCache& distances,
                                       VertexId x, VertexId y) {
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "decomposition requires two distinct vertices");
  }
  Distance dxy = distances(x, y);
  if (dxy == kUnreachable) {
    throw Error(ErrorCode::kInfiniteDistance,
                "no directed path from " + std::to_string(x) + " to " +
                    std::to_string(y));
  }
  GammaDecomposition out;
  out.buckets.assign(static_cast<std::size_t>(dxy) + 1, {});
  for (VertexId v : distances.graph().out_neighbors(y)) {
    Distance dxv = distances(x, v);
    if (dxv != kUnreachable && dxv <= dxy) {
      out.buckets[static_cast<std::size_t>(dxy - dxv)].push_back(v);
    } else {
      // d(x,v) <= d(x,y) + 1 holds whenever finite (triangle through y);
      // unreachable out-neighbors cannot occur while x -> y -> v exists.
      out.plus.push_back(v);
    }
  }
  return out;
}

}  // namespace dirricci
