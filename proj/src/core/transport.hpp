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

#ifndef DIRRICCI_CORE_TRANSPORT_HPP
#define DIRRICCI_CORE_TRANSPORT_HPP

#include <functional>
#include <map>
#include <utility>

#include "core/graph.hpp"
#include "core/measure.hpp"
#include "core/scalar.hpp"

namespace dirricci {

// Asymmetric hop distance oracle; kUnreachable where no path exists.
using DistanceFn = std::function<Distance(VertexId, VertexId)>;

// Joint mass assignment whose row sums reproduce the first measure and
// column sums the second. Only positive flows are stored.
struct Coupling {
  std::map<Edge, Scalar> flows;
};

// Values over the union of the two supports satisfying the asymmetric
// Lipschitz condition f(u) - f(v) <= d(u, v) wherever d(u, v) is finite.
struct LipschitzPotential {
  std::map<VertexId, Scalar> values;
};

struct TransportResult {
  Scalar value;
  Coupling coupling;
  // Feasible dual potential whose objective equals `value` exactly,
  // normalized so the smallest support vertex gets 0.
  LipschitzPotential potential;
};

// Exact optimum of the transportation problem between mu and nu under
// integer costs d(u, v), by successive shortest paths on the bipartite
// support graph. Uses only ordered-field comparison, +, -, and min on
// masses, so it is equally valid for infinitesimal-valued measures.
// Requires equal total masses and finite distances on supp(mu) x supp(nu).
TransportResult wasserstein(const SparseMeasure& mu, const SparseMeasure& nu,
                            const DistanceFn& distance);

// Dual objective sum_z f(z) (mu(z) - nu(z)). Checks feasibility of f over
// the joint support first and reports the violated pair otherwise. By weak
// duality the result never exceeds wasserstein(mu, nu).value.
Scalar lipschitz_objective(const LipschitzPotential& f,
                           const SparseMeasure& mu, const SparseMeasure& nu,
                           const DistanceFn& distance);

// Independent verification oracle: exhaustively enumerates the spanning-tree
// basic feasible solutions of the bipartite transportation polytope and
// returns the least cost. Supports of size > 6 are rejected.
Scalar oracle_wasserstein(const SparseMeasure& mu, const SparseMeasure& nu,
                          const DistanceFn& distance);

namespace internal {
// Number of spanning trees the oracle enumerates for supports of sizes
// (p, q); must equal p^(q-1) * q^(p-1). Exposed for tests.
std::size_t spanning_tree_count(std::size_t p, std::size_t q);
}  // namespace internal

}  // namespace dirricci

#endif  // DIRRICCI_CORE_TRANSPORT_HPP
