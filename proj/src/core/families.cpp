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

#include "core/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "core/error.hpp"

namespace dirricci {

DirectedGraph oriented_complete(std::uint32_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kNTooSmall,
                "oriented complete graphs need n >= 3, got " +
                    std::to_string(n));
  }
  std::uint32_t full = n % 2 == 1 ? n : n + 1;  // odd case 2m+1
  std::uint32_t m = full / 2;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < full; ++i) {
    for (std::uint32_t s = 1; s <= m; ++s) {
      std::uint32_t j = (i + s) % full;
      if (i < n && j < n) edges.emplace_back(i, j);  // even case drops 2m+1
    }
  }
  return DirectedGraph::build(n, std::move(edges));
}

DirectedGraph directed_cycle(std::uint32_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kNTooSmall,
                "directed cycles need n >= 3, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return DirectedGraph::build(n, std::move(edges));
}

DirectedGraph rooted_in_tree(const TreeSpec& spec) {
  // The vertex set is everything mentioned; indexing must come out dense.
  std::uint32_t n = spec.root + 1;
  for (const auto& [child, parent] : spec.parent) {
    n = std::max({n, child + 1, parent + 1});
  }
  if (spec.parent.count(spec.root) > 0) {
    throw Error(ErrorCode::kCyclicParentMap,
                "the root may not have a parent");
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != spec.root && spec.parent.count(v) == 0) {
      throw Error(ErrorCode::kCyclicParentMap,
                  "vertex " + std::to_string(v) + " has no parent entry");
    }
  }
  // Every parent chain must reach the root.
  for (const auto& [child, _] : spec.parent) {
    VertexId w = child;
    std::uint32_t steps = 0;
    while (w != spec.root) {
      auto it = spec.parent.find(w);
      if (it == spec.parent.end() || ++steps > n) {
        throw Error(ErrorCode::kCyclicParentMap,
                    "parent chain from vertex " + std::to_string(child) +
                        " never reaches the root");
      }
      w = it->second;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(spec.parent.size());
  for (const auto& [child, parent] : spec.parent) {
    edges.emplace_back(child, parent);
  }
  return DirectedGraph::build(n, std::move(edges));
}

DirectedGraph cycle_product(std::uint32_t g, std::uint32_t h) {
  if (g < 3 || h < 3) {
    throw Error(ErrorCode::kNTooSmall,
                "cycle products need both factors >= 3");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g) * h * 2);
  auto id = [h](std::uint32_t i, std::uint32_t j) { return i * h + j; };
  for (std::uint32_t i = 0; i < g; ++i) {
    for (std::uint32_t j = 0; j < h; ++j) {
      edges.emplace_back(id(i, j), id((i + 1) % g, j));
      edges.emplace_back(id(i, j), id(i, (j + 1) % h));
    }
  }
  return DirectedGraph::build(g * h, std::move(edges));
}

DirectedGraph circulant(std::uint32_t n,
                        const std::vector<std::uint32_t>& offsets) {
  if (offsets.empty()) {
    throw Error(ErrorCode::kEmptyOffsets, "circulant offsets may not be empty");
  }
  std::set<std::uint32_t> unique(offsets.begin(), offsets.end());
  for (std::uint32_t s : unique) {
    if (s == 0 || s >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "circulant offset " + std::to_string(s) +
                      " outside 1.." + std::to_string(n - 1));
    }
    if (unique.count(n - s) > 0) {
      throw Error(ErrorCode::kAntiParallelOffsets,
                  "offsets " + std::to_string(s) + " and " +
                      std::to_string(n - s) +
                      " together create anti-parallel pairs");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * unique.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t s : unique) edges.emplace_back(i, (i + s) % n);
  }
  return DirectedGraph::build(n, std::move(edges));
}

}  // namespace dirricci
