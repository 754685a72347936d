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

#ifndef DIRRICCI_CORE_MEASURE_HPP
#define DIRRICCI_CORE_MEASURE_HPP

#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/scalar.hpp"

namespace dirricci {

// Finitely supported measure with exact positive masses, entries sorted by
// vertex. Zero masses are never stored, so support assertions are exact.
class SparseMeasure {
 public:
  using Entry = std::pair<VertexId, Scalar>;

  SparseMeasure() = default;
  static SparseMeasure from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  Scalar mass(VertexId v) const;
  Scalar total_mass() const;

  friend bool operator==(const SparseMeasure&, const SparseMeasure&) = default;

 private:
  std::vector<Entry> entries_;
};

// The lazy-walk measure: mass alpha + (1-alpha) d_in/d at x and (1-alpha)/d
// on each out-neighbor of x. alpha may be any Scalar in [0, 1], including
// 1 - eps for the limit solve; alpha = 1 collapses to the point mass at x.
SparseMeasure build_walk_measure(const DirectedGraph& graph, VertexId x,
                                 const Scalar& alpha);

}  // namespace dirricci

#endif  // DIRRICCI_CORE_MEASURE_HPP
