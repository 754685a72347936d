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

#ifndef DIRRICCI_CORE_FAMILIES_HPP
#define DIRRICCI_CORE_FAMILIES_HPP

#include <map>
#include <vector>

#include "core/graph.hpp"

namespace dirricci {

// Tournament on n >= 3 vertices: for odd n = 2m+1, vertex i points at the
// next m vertices cyclically; for even n the last vertex of the (n+1)-case
// is deleted. Exactly one direction per pair.
DirectedGraph oriented_complete(std::uint32_t n);

// The n-cycle with all edges oriented forward; (d, d_in, d_out) = (2, 1, 1).
DirectedGraph directed_cycle(std::uint32_t n);

// In-tree: every non-root vertex has one out-edge, to its parent. The root
// has out-degree 0, so the result is never strongly connected; per-pair
// curvature stays well defined on edges whose head is not the root.
struct TreeSpec {
  VertexId root = 0;
  std::map<VertexId, VertexId> parent;  // every non-root vertex -> parent
};
DirectedGraph rooted_in_tree(const TreeSpec& spec);

// Cartesian product of two directed cycles on g*h vertices; vertex (i, j)
// has index i*h + j and points at (i+1, j) and (i, j+1). 4-regular with
// out-degree 2 and strongly connected.
DirectedGraph cycle_product(std::uint32_t g, std::uint32_t h);

// Edges (i, i+s mod n) for each offset s. Offsets s and n-s may not both be
// present (that would create anti-parallel pairs). Regular with out-degree
// |offsets|; strongly connected iff gcd(n, offsets) = 1.
DirectedGraph circulant(std::uint32_t n,
                        const std::vector<std::uint32_t>& offsets);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_FAMILIES_HPP
