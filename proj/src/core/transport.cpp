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

#include "core/transport.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace dirricci {

namespace {

// Bipartite transportation instance: supplies from mu, demands from nu,
// integer arc costs d(source_i, sink_j).
struct BipartiteProblem {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<Scalar> supply;
  std::vector<Scalar> demand;
  std::vector<std::vector<Distance>> cost;  // p x q
};

BipartiteProblem make_problem(const SparseMeasure& mu, const SparseMeasure& nu,
                              const DistanceFn& distance) {
  if (mu.total_mass() != nu.total_mass()) {
    throw Error(ErrorCode::kMassMismatch,
                "total masses differ: " + mu.total_mass().str() + " vs " +
                    nu.total_mass().str());
  }
  BipartiteProblem p;
  for (const auto& [v, m] : mu.entries()) {
    p.sources.push_back(v);
    p.supply.push_back(m);
  }
  for (const auto& [v, m] : nu.entries()) {
    p.sinks.push_back(v);
    p.demand.push_back(m);
  }
  p.cost.assign(p.sources.size(), std::vector<Distance>(p.sinks.size(), 0));
  for (std::size_t i = 0; i < p.sources.size(); ++i) {
    for (std::size_t j = 0; j < p.sinks.size(); ++j) {
      Distance d = distance(p.sources[i], p.sinks[j]);
      if (d == kUnreachable) {
        throw Error(ErrorCode::kInfiniteRequiredDistance,
                    "no directed path from support vertex " +
                        std::to_string(p.sources[i]) + " to " +
                        std::to_string(p.sinks[j]));
      }
      p.cost[i][j] = d;
    }
  }
  return p;
}

// Node indexing for the solver: 0..p-1 are sources, p..p+q-1 sinks.
struct ShortestPath {
  std::vector<std::int64_t> dist;
  std::vector<std::vector<VertexId>> path;  // vertex-id sequence for ties
  std::vector<int> prev;                    // node index, -1 at roots
  std::vector<bool> reached;
};

// Dijkstra over reduced costs. Among equal-distance paths the
// lexicographically smallest vertex-id sequence wins, which makes the
// returned coupling deterministic; the optimal value is unaffected.
ShortestPath reduced_dijkstra(const BipartiteProblem& p,
                              const std::vector<std::vector<Scalar>>& flow,
                              const std::vector<Scalar>& supply_left,
                              const std::vector<std::int64_t>& potential) {
  const std::size_t np = p.sources.size(), nq = p.sinks.size();
  const std::size_t n = np + nq;
  ShortestPath sp;
  sp.dist.assign(n, std::numeric_limits<std::int64_t>::max());
  sp.path.assign(n, {});
  sp.prev.assign(n, -1);
  sp.reached.assign(n, false);
  std::vector<bool> done(n, false);

  for (std::size_t i = 0; i < np; ++i) {
    if (supply_left[i].sign() > 0) {
      sp.dist[i] = 0;
      sp.path[i] = {p.sources[i]};
      sp.reached[i] = true;
    }
  }

  auto better = [&](std::int64_t d1, const std::vector<VertexId>& p1,
                    std::int64_t d2, const std::vector<VertexId>& p2) {
    return d1 < d2 || (d1 == d2 && p1 < p2);
  };

  for (;;) {
    int u = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && sp.reached[v] &&
          (u < 0 || better(sp.dist[v], sp.path[v], sp.dist[u], sp.path[u]))) {
        u = static_cast<int>(v);
      }
    }
    if (u < 0) break;
    done[u] = true;

    auto relax = [&](std::size_t to, std::int64_t reduced_cost,
                     VertexId to_id) {
      std::int64_t nd = sp.dist[u] + reduced_cost;
      std::vector<VertexId> npath = sp.path[u];
      npath.push_back(to_id);
      if (!sp.reached[to] || better(nd, npath, sp.dist[to], sp.path[to])) {
        sp.dist[to] = nd;
        sp.path[to] = std::move(npath);
        sp.prev[to] = u;
        sp.reached[to] = true;
      }
    };

    if (static_cast<std::size_t>(u) < np) {
      std::size_t i = static_cast<std::size_t>(u);
      for (std::size_t j = 0; j < nq; ++j) {
        relax(np + j, p.cost[i][j] + potential[i] - potential[np + j],
              p.sinks[j]);
      }
    } else {
      std::size_t j = static_cast<std::size_t>(u) - np;
      for (std::size_t i = 0; i < np; ++i) {
        if (flow[i][j].sign() > 0) {
          relax(i, -p.cost[i][j] + potential[np + j] - potential[i],
                p.sources[i]);
        }
      }
    }
  }
  return sp;
}

}  // namespace

TransportResult wasserstein(const SparseMeasure& mu, const SparseMeasure& nu,
                            const DistanceFn& distance) {
  if (mu == nu) {
    TransportResult r;
    r.value = Scalar(0);
    for (const auto& [v, m] : mu.entries()) r.coupling.flows[{v, v}] = m;
    for (const auto& [v, m] : mu.entries()) r.potential.values[v] = Scalar(0);
    return r;
  }

  BipartiteProblem p = make_problem(mu, nu, distance);
  const std::size_t np = p.sources.size(), nq = p.sinks.size();

  std::vector<std::vector<Scalar>> flow(np, std::vector<Scalar>(nq, Scalar(0)));
  std::vector<std::int64_t> potential(np + nq, 0);
  std::vector<Scalar> supply_left = p.supply;
  std::vector<Scalar> demand_left = p.demand;

  auto supplies_remain = [&] {
    for (const auto& s : supply_left) {
      if (s.sign() > 0) return true;
    }
    return false;
  };

  int guard = 0;
  while (supplies_remain()) {
    if (++guard > 100000) {
      throw std::logic_error("transport: augmentation bound exceeded");
    }
    ShortestPath sp = reduced_dijkstra(p, flow, supply_left, potential);

    int target = -1;
    for (std::size_t j = 0; j < nq; ++j) {
      std::size_t node = np + j;
      if (demand_left[j].sign() > 0 && sp.reached[node] &&
          (target < 0 ||
           sp.dist[node] < sp.dist[target] ||
           (sp.dist[node] == sp.dist[target] &&
            sp.path[node] < sp.path[target]))) {
        target = static_cast<int>(node);
      }
    }
    if (target < 0) {
      throw std::logic_error("transport: no augmenting path found");
    }

    std::int64_t dist_t = sp.dist[target];
    for (std::size_t v = 0; v < np + nq; ++v) {
      potential[v] += sp.reached[v] ? std::min(sp.dist[v], dist_t) : dist_t;
    }

    // Collect the node path root..target, then its bottleneck.
    std::vector<int> nodes;
    for (int v = target; v >= 0; v = sp.prev[v]) nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());

    std::size_t src = static_cast<std::size_t>(nodes.front());
    std::size_t dst = static_cast<std::size_t>(target) - np;
    Scalar delta = supply_left[src];
    delta = std::min(delta, demand_left[dst]);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      int a = nodes[k], b = nodes[k + 1];
      if (a >= static_cast<int>(np)) {  // backward arc sink -> source
        delta = std::min(delta, flow[b][a - np]);
      }
    }
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      int a = nodes[k], b = nodes[k + 1];
      if (a < static_cast<int>(np)) {
        flow[a][b - np] += delta;
      } else {
        flow[b][a - np] -= delta;
      }
    }
    supply_left[src] -= delta;
    demand_left[dst] -= delta;
  }

  TransportResult result;
  result.value = Scalar(0);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      if (flow[i][j].sign() > 0) {
        result.value += flow[i][j] * Scalar(Rational(p.cost[i][j]));
        result.coupling.flows[{p.sources[i], p.sinks[j]}] = flow[i][j];
      }
    }
  }

  // Dual extraction: on sinks the terminal potentials are dual-optimal; the
  // Lipschitz extension F(z) = min_j (d(z, sink_j) - pi[sink_j]) is feasible
  // on the whole joint support by the triangle inequality and matches the
  // primal value exactly.
  std::set<VertexId> joint;
  for (VertexId v : p.sources) joint.insert(v);
  for (VertexId v : p.sinks) joint.insert(v);

  std::vector<std::int64_t> raw;
  std::vector<VertexId> joint_list(joint.begin(), joint.end());
  for (VertexId z : joint_list) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < nq; ++j) {
      Distance d = z == p.sinks[j] ? 0 : distance(z, p.sinks[j]);
      if (d == kUnreachable) continue;
      best = std::min(best, d - potential[np + j]);
    }
    if (best == std::numeric_limits<std::int64_t>::max()) {
      throw std::logic_error("transport: potential extension unreachable");
    }
    raw.push_back(best);
  }
  std::int64_t shift = raw.front();
  for (std::size_t k = 0; k < joint_list.size(); ++k) {
    result.potential.values[joint_list[k]] =
        Scalar(Rational(raw[k] - shift));
  }

  Scalar dual = lipschitz_objective(result.potential, mu, nu, distance);
  if (dual != result.value) {
    throw std::logic_error("transport: dual certificate does not match " +
                           result.value.str() + " (got " + dual.str() + ")");
  }
  return result;
}

Scalar lipschitz_objective(const LipschitzPotential& f,
                           const SparseMeasure& mu, const SparseMeasure& nu,
                           const DistanceFn& distance) {
  std::set<VertexId> joint;
  for (const auto& [v, m] : mu.entries()) joint.insert(v);
  for (const auto& [v, m] : nu.entries()) joint.insert(v);

  auto value_of = [&](VertexId v) -> Scalar {
    auto it = f.values.find(v);
    return it == f.values.end() ? Scalar(0) : it->second;
  };

  for (VertexId u : joint) {
    for (VertexId v : joint) {
      if (u == v) continue;
      Distance d = distance(u, v);
      if (d == kUnreachable) continue;  // no constraint
      if (value_of(u) - value_of(v) > Scalar(Rational(d))) {
        throw Error(ErrorCode::kLipschitzViolation,
                    "f(" + std::to_string(u) + ") - f(" + std::to_string(v) +
                        ") exceeds d = " + std::to_string(d));
      }
    }
  }

  Scalar total(0);
  for (VertexId z : joint) {
    total += value_of(z) * (mu.mass(z) - nu.mass(z));
  }
  return total;
}

namespace {

// --- Oracle: exhaustive enumeration of spanning-tree basic solutions. ---

using TreeArcs = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

// All spanning trees of K_{p,q}, each encoded once as its parent array
// rooted at source 0. There are p^(q-1) * q^(p-1) of them.
const std::vector<TreeArcs>& spanning_trees(std::size_t p, std::size_t q) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<TreeArcs>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(p, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<TreeArcs> trees;
  const std::size_t n = p + q;
  // Odometer digits: 0..q-1 pick the source feeding sink k (base p),
  // q..q+p-2 pick the sink feeding source k-q+1 (base q). Source 0 is the
  // root; every spanning tree has exactly one such parent array.
  std::vector<std::size_t> choice(q + p - 1, 0);
  std::vector<std::size_t> limit(q + p - 1);
  for (std::size_t k = 0; k < q; ++k) limit[k] = p;
  for (std::size_t k = q; k < q + p - 1; ++k) limit[k] = q;

  std::vector<std::size_t> parent(n, 0);
  std::vector<unsigned> stamp(n, 0);
  std::vector<std::size_t> walk;
  unsigned round = 0;

  for (;;) {
    for (std::size_t k = 0; k < q; ++k) parent[p + k] = choice[k];
    for (std::size_t k = 0; k + 1 < p; ++k) parent[k + 1] = p + choice[q + k];

    // The assignment is a tree iff every parent chain reaches the root.
    // Nodes get stamped only once their chain is confirmed, so a stamped
    // node acts as a verified shortcut within this round.
    ++round;
    stamp[0] = round;
    bool ok = true;
    for (std::size_t v = 1; v < n && ok; ++v) {
      if (stamp[v] == round) continue;
      walk.clear();
      std::size_t w = v;
      while (stamp[w] != round) {
        walk.push_back(w);
        if (walk.size() > n) {  // some node repeated: parent cycle
          ok = false;
          break;
        }
        w = parent[w];
      }
      if (ok) {
        for (std::size_t x : walk) stamp[x] = round;
      }
    }
    if (ok) {
      TreeArcs arcs;
      arcs.reserve(n - 1);
      for (std::size_t v = 1; v < n; ++v) {
        std::size_t u = parent[v];
        std::uint8_t i = static_cast<std::uint8_t>(v < p ? v : u);
        std::uint8_t j = static_cast<std::uint8_t>(v < p ? u - p : v - p);
        arcs.emplace_back(i, j);
      }
      trees.push_back(std::move(arcs));
    }

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == limit[k]) {
      choice[k] = 0;
      ++k;
    }
    if (k == choice.size()) break;
  }
  return cache.emplace(key, std::move(trees)).first->second;
}

template <typename IntT>
struct MassPair {
  IntT a{};
  IntT b{};

  MassPair& operator+=(const MassPair& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  bool negative() const { return a < 0 || (a == 0 && b < 0); }
  bool less(const MassPair& o) const {
    return a < o.a || (a == o.a && b < o.b);
  }
};

// Flows on a fixed spanning tree are forced by leaf elimination; a tree is
// feasible iff they all come out nonnegative.
template <typename IntT>
bool evaluate_tree(const TreeArcs& arcs, std::size_t p, std::size_t q,
                   const std::vector<MassPair<IntT>>& scaled_supply,
                   const std::vector<MassPair<IntT>>& scaled_demand,
                   const std::vector<std::vector<Distance>>& cost,
                   MassPair<IntT>* out_cost) {
  const std::size_t n = p + q;
  std::array<std::int8_t, 16> degree{};
  std::array<std::array<std::int8_t, 12>, 16> incident{};
  std::array<std::int8_t, 16> incident_count{};
  std::array<bool, 12> arc_used{};
  std::vector<MassPair<IntT>> excess(n);

  for (std::size_t i = 0; i < p; ++i) excess[i] = scaled_supply[i];
  for (std::size_t j = 0; j < q; ++j) {
    excess[p + j].a = -scaled_demand[j].a;
    excess[p + j].b = -scaled_demand[j].b;
  }
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    std::size_t u = arcs[k].first;
    std::size_t v = p + arcs[k].second;
    incident[u][incident_count[u]++] = static_cast<std::int8_t>(k);
    incident[v][incident_count[v]++] = static_cast<std::int8_t>(k);
    ++degree[u];
    ++degree[v];
    arc_used[k] = false;
  }

  MassPair<IntT> total{};
  std::size_t processed = 0;
  for (;;) {
    std::size_t leaf = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        leaf = v;
        break;
      }
    }
    if (leaf == n) break;
    std::size_t arc = 0;
    for (std::size_t k = 0; k < static_cast<std::size_t>(incident_count[leaf]);
         ++k) {
      std::size_t a = static_cast<std::size_t>(incident[leaf][k]);
      if (!arc_used[a]) {
        arc = a;
        break;
      }
    }
    std::size_t i = arcs[arc].first;
    std::size_t j = arcs[arc].second;
    std::size_t other = (leaf == i) ? p + j : i;

    MassPair<IntT> flow = excess[leaf];
    if (leaf >= p) {
      flow.a = -flow.a;
      flow.b = -flow.b;
    }
    if (flow.negative()) return false;
    IntT c(static_cast<long long>(cost[i][j]));
    total.a += flow.a * c;
    total.b += flow.b * c;

    excess[other] += excess[leaf];
    excess[leaf] = MassPair<IntT>{};
    arc_used[arc] = true;
    --degree[leaf];
    --degree[other];
    ++processed;
  }
  if (processed != arcs.size()) return false;
  *out_cost = total;
  return true;
}

template <typename IntT>
Scalar oracle_solve(const BipartiteProblem& p, const BigInt& scale) {
  const std::size_t np = p.sources.size(), nq = p.sinks.size();
  auto to_int = [&](const Rational& r) {
    BigInt v = numerator(r) * (scale / denominator(r));
    return static_cast<IntT>(v);
  };
  std::vector<MassPair<IntT>> supply(np), demand(nq);
  for (std::size_t i = 0; i < np; ++i) {
    supply[i] = {to_int(p.supply[i].constant_part()),
                 to_int(p.supply[i].epsilon_part())};
  }
  for (std::size_t j = 0; j < nq; ++j) {
    demand[j] = {to_int(p.demand[j].constant_part()),
                 to_int(p.demand[j].epsilon_part())};
  }

  bool found = false;
  MassPair<IntT> best{};
  for (const TreeArcs& tree : spanning_trees(np, nq)) {
    MassPair<IntT> c{};
    if (evaluate_tree(tree, np, nq, supply, demand, p.cost, &c)) {
      if (!found || c.less(best)) {
        best = c;
        found = true;
      }
    }
  }
  if (!found) {
    throw std::logic_error("oracle: transportation polytope came out empty");
  }
  Rational ra(BigInt(best.a), scale);
  Rational rb(BigInt(best.b), scale);
  return Scalar(std::move(ra), std::move(rb));
}

}  // namespace

namespace internal {

std::size_t spanning_tree_count(std::size_t p, std::size_t q) {
  return spanning_trees(p, q).size();
}

}  // namespace internal

Scalar oracle_wasserstein(const SparseMeasure& mu, const SparseMeasure& nu,
                          const DistanceFn& distance) {
  if (mu.support_size() > 6 || nu.support_size() > 6) {
    throw Error(ErrorCode::kSupportTooLarge,
                "oracle enumerates supports of size at most 6");
  }
  if (mu == nu) return Scalar(0);
  BipartiteProblem p = make_problem(mu, nu, distance);

  BigInt scale = 1;
  auto fold = [&](const Scalar& s) {
    scale = lcm(scale, denominator(s.constant_part()));
    scale = lcm(scale, denominator(s.epsilon_part()));
  };
  for (const auto& s : p.supply) fold(s);
  for (const auto& s : p.demand) fold(s);

  Distance max_cost = 0;
  for (const auto& row : p.cost) {
    for (Distance c : row) max_cost = std::max(max_cost, c);
  }
  // Partial excess sums stay within (p+q) * scale and each cost term within
  // that times max_cost; stay on int64 when that bound fits comfortably.
  BigInt bound = scale * BigInt(p.sources.size() + p.sinks.size() + 2) *
                 BigInt(max_cost + 2) * 4;
  if (bound < BigInt(std::int64_t{1} << 62)) {
    return oracle_solve<std::int64_t>(p, scale);
  }
  return oracle_solve<BigInt>(p, scale);
}

}  // namespace dirricci
