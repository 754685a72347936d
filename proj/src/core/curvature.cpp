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

#include "core/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "core/error.hpp"
#include "core/measure.hpp"

namespace dirricci {

namespace {

Distance checked_distance(const DistanceCache& distances, VertexId x,
                          VertexId y) {
  if (x == y) {
    throw Error(ErrorCode::kSameVertex,
                "curvature requires two distinct vertices");
  }
  Distance dxy = distances(x, y);
  if (dxy == kUnreachable) {
    throw Error(ErrorCode::kInfiniteDistance,
                "no directed path from " + std::to_string(x) + " to " +
                    std::to_string(y));
  }
  return dxy;
}

Scalar transport_value(const DistanceCache& distances, VertexId x, VertexId y,
                       const Scalar& alpha) {
  const DirectedGraph& g = distances.graph();
  SparseMeasure mu = build_walk_measure(g, x, alpha);
  SparseMeasure nu = build_walk_measure(g, y, alpha);
  auto dist = [&distances](VertexId u, VertexId v) { return distances(u, v); };
  return wasserstein(mu, nu, dist).value;
}

}  // namespace

Rational alpha_ricci(const DistanceCache& distances, VertexId x, VertexId y,
                     const Rational& alpha) {
  Distance dxy = checked_distance(distances, x, y);
  Scalar w = transport_value(distances, x, y, Scalar(alpha));
  if (!w.is_rational()) {
    throw std::logic_error("alpha_ricci: rational solve left an eps part");
  }
  return 1 - w.constant_part() / Rational(dxy);
}

Rational ricci(const DistanceCache& distances, VertexId x, VertexId y) {
  Distance dxy = checked_distance(distances, x, y);
  Scalar w = transport_value(distances, x, y, one_minus_epsilon());
  // At eps = 0 both measures are point masses, so the constant term is d(x,y).
  if (w.constant_part() != Rational(dxy)) {
    throw std::logic_error("ricci: limit solve constant term " +
                           rational_to_string(w.constant_part()) +
                           " differs from d(x,y)");
  }
  return -w.epsilon_part() / Rational(dxy);
}

LadderResult ricci_ladder(const DistanceCache& distances, VertexId x,
                          VertexId y) {
  constexpr int kMaxRung = 24;
  LadderResult result;
  for (int k = 3; k <= kMaxRung; ++k) {
    BigInt pow2 = BigInt(1) << k;
    Rational alpha = Rational(pow2 - 1, pow2);
    Rational h = alpha_ricci(distances, x, y, alpha) * Rational(pow2);
    if (!result.trace.empty() && h < result.trace.back().h) {
      throw std::logic_error("ricci_ladder: h(alpha) decreased at k = " +
                             std::to_string(k));
    }
    bool stabilized = !result.trace.empty() && h == result.trace.back().h;
    result.trace.push_back({k, alpha, h});
    if (stabilized) {
      result.value = h;
      Rational limit = ricci(distances, x, y);
      if (limit != h) {
        throw std::logic_error("ricci_ladder: stabilized at " +
                               rational_to_string(h) +
                               " but the limit solve gives " +
                               rational_to_string(limit));
      }
      return result;
    }
  }
  throw Error(ErrorCode::kLadderNotStabilized,
              "h(alpha) not stabilized by k = " + std::to_string(kMaxRung) +
                  "; a breakpoint denominator exceeds the ladder");
}

Rational curvature_upper_bound(const DistanceCache& distances, VertexId x,
                               VertexId y) {
  Distance dxy = checked_distance(distances, x, y);
  GammaDecomposition gd = gamma_decomposition(distances, x, y);
  const DirectedGraph& g = distances.graph();
  const DegreeTriple& dx = g.degree_triple(x);
  const DegreeTriple& dy = g.degree_triple(y);

  // Bucket k = d(x,y) (present exactly when (y,x) is an edge) belongs in the
  // sum: dropping it, as the usual statement over 1..d(x,y)-1 does, breaks
  // the bound for such pairs.
  Rational inner = 0;
  for (std::size_t k = 1; k < gd.buckets.size(); ++k) {
    inner += Rational(k) * Rational(gd.buckets[k].size());
  }
  inner -= Rational(gd.plus.size());

  Rational braced = inner / Rational(dy.degree) +
                    Rational(dx.out_degree, dx.degree);
  return braced / Rational(dxy);
}

CurvatureReport curvature_report(const DistanceCache& distances) {
  const DirectedGraph& g = distances.graph();
  if (!is_strongly_connected(g)) {
    throw Error(ErrorCode::kNotStronglyConnected,
                "whole-graph curvature requires strong connectivity");
  }
  distances.precompute_all();

  std::vector<Edge> edges = g.edges();
  std::vector<Rational> kappa(edges.size());

  std::size_t workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), edges.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      kappa[i] = ricci(distances, edges[i].first, edges[i].second);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= edges.size()) return;
          kappa[i] = ricci(distances, edges[i].first, edges[i].second);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  CurvatureReport report;
  report.per_edge.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    report.per_edge.emplace_back(edges[i], kappa[i]);
  }
  if (kappa.empty()) {
    // no edges: flat and constant vacuously
    report.is_constant = true;
    report.is_ricci_flat = true;
    return report;
  }
  report.min = *std::min_element(kappa.begin(), kappa.end());
  report.max = *std::max_element(kappa.begin(), kappa.end());
  report.is_constant = report.min == report.max;
  if (report.is_constant) report.constant_value = report.min;
  report.is_ricci_flat = report.is_constant && *report.constant_value == 0;
  return report;
}

const char* condition_label(Condition condition) {
  switch (condition) {
    case Condition::kDisjointOutNeighborhoods:
      return "A";
    case Condition::kEqualOutDegree:
      return "EqualOutDegree";
    case Condition::kOutNeighborhoodMatching:
      return "MatchingPhi";
    case Condition::kUniqueIntermediary:
      return "B";
  }
  return "?";
}

namespace {

// Kuhn's augmenting-path matching on |A| x |B| with admissible pairs
// (a, b) iff (a, b) is an edge of the graph. Returns the matching size.
std::size_t max_matching(const DirectedGraph& g,
                         std::span<const VertexId> left,
                         std::span<const VertexId> right) {
  std::vector<int> match_right(right.size(), -1);
  std::vector<bool> used;

  std::function<bool(std::size_t)> try_assign = [&](std::size_t a) -> bool {
    for (std::size_t b = 0; b < right.size(); ++b) {
      if (used[b] || !g.has_edge(left[a], right[b])) continue;
      used[b] = true;
      if (match_right[b] < 0 ||
          try_assign(static_cast<std::size_t>(match_right[b]))) {
        match_right[b] = static_cast<int>(a);
        return true;
      }
    }
    return false;
  };

  std::size_t size = 0;
  for (std::size_t a = 0; a < left.size(); ++a) {
    used.assign(right.size(), false);
    if (try_assign(a)) ++size;
  }
  return size;
}

}  // namespace

ConditionVerdict check_condition(const DirectedGraph& graph, Condition which) {
  ConditionVerdict verdict;
  verdict.condition = which;

  switch (which) {
    case Condition::kDisjointOutNeighborhoods: {
      for (const auto& [x, y] : graph.edges()) {
        auto ox = graph.out_neighbors(x);
        auto oy = graph.out_neighbors(y);
        std::vector<VertexId> shared;
        std::set_intersection(ox.begin(), ox.end(), oy.begin(), oy.end(),
                              std::back_inserter(shared));
        for (VertexId w : shared) verdict.witnesses.push_back({x, y, w});
      }
      break;
    }
    case Condition::kEqualOutDegree: {
      if (graph.vertex_count() > 0) {
        std::uint32_t base = graph.degree_triple(0).out_degree;
        for (VertexId v = 1; v < graph.vertex_count(); ++v) {
          std::uint32_t dv = graph.degree_triple(v).out_degree;
          if (dv != base) verdict.witnesses.push_back({v, dv});
        }
        if (!verdict.witnesses.empty()) {
          verdict.witnesses.insert(verdict.witnesses.begin(), {0, base});
        }
      }
      break;
    }
    case Condition::kOutNeighborhoodMatching: {
      if (!is_strongly_connected(graph)) {
        throw Error(ErrorCode::kNotStronglyConnected,
                    "the matching condition is checked on strongly "
                    "connected graphs");
      }
      for (const auto& [u, v] : graph.edges()) {
        auto a = graph.out_neighbors(u);
        auto b = graph.out_neighbors(v);
        if (a.size() != b.size() || max_matching(graph, a, b) != a.size()) {
          verdict.witnesses.push_back({u, v});
        }
      }
      break;
    }
    case Condition::kUniqueIntermediary: {
      if (!is_strongly_connected(graph)) {
        throw Error(ErrorCode::kNotStronglyConnected,
                    "the intermediary condition is checked on strongly "
                    "connected graphs");
      }
      // Every adjacent edge pair of a strongly connected graph lies on a
      // directed cycle, so quantifying over the pairs covers all cycles.
      for (const auto& [x, y] : graph.edges()) {
        for (VertexId z : graph.out_neighbors(y)) {
          if (z == x) continue;
          auto ox = graph.out_neighbors(x);
          auto iz = graph.in_neighbors(z);
          std::vector<VertexId> shared;
          std::set_intersection(ox.begin(), ox.end(), iz.begin(), iz.end(),
                                std::back_inserter(shared));
          for (VertexId w : shared) {
            if (w != y) verdict.witnesses.push_back({x, y, z, w});
          }
        }
      }
      break;
    }
  }
  verdict.holds = verdict.witnesses.empty();
  return verdict;
}

}  // namespace dirricci
