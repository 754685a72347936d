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

#include "core/measure.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace dirricci {

SparseMeasure SparseMeasure::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second.sign() <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "measure mass at vertex " +
                      std::to_string(entries[i].first) +
                      " must be positive, got " + entries[i].second.str());
    }
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate measure entry for vertex " +
                      std::to_string(entries[i].first));
    }
  }
  SparseMeasure m;
  m.entries_ = std::move(entries);
  return m;
}

Scalar SparseMeasure::mass(VertexId v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, VertexId key) { return e.first < key; });
  if (it != entries_.end() && it->first == v) return it->second;
  return Scalar(0);
}

Scalar SparseMeasure::total_mass() const {
  Scalar total(0);
  for (const auto& [v, mass] : entries_) total += mass;
  return total;
}

SparseMeasure build_walk_measure(const DirectedGraph& graph, VertexId x,
                                 const Scalar& alpha) {
  if (alpha.sign() < 0 || alpha > Scalar(1)) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha must lie in [0, 1], got " + alpha.str());
  }
  const DegreeTriple& deg = graph.degree_triple(x);
  if (deg.degree == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "walk measure undefined at isolated vertex " +
                    std::to_string(x));
  }
  if (deg.degree != deg.in_degree + deg.out_degree) {
    throw Error(ErrorCode::kDegreeConventionViolated,
                "vertex " + std::to_string(x) +
                    " has d != d_in + d_out; total mass would not be 1");
  }

  Scalar lazy_rest = Scalar(1) - alpha;                // 1 - alpha
  Scalar per_neighbor = lazy_rest / Scalar(deg.degree);
  Scalar at_x = alpha + per_neighbor * Scalar(deg.in_degree);

  std::vector<SparseMeasure::Entry> entries;
  entries.reserve(1 + deg.out_degree);
  if (at_x.sign() > 0) entries.emplace_back(x, at_x);
  if (per_neighbor.sign() > 0) {
    for (VertexId v : graph.out_neighbors(x)) {
      entries.emplace_back(v, per_neighbor);
    }
  }
  return SparseMeasure::from_entries(std::move(entries));
}

}  // namespace dirricci
