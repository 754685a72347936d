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

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"

using namespace dirricci;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

DirectedGraph random_simple_digraph(std::mt19937& rng, VertexId n,
                                    double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        // keep at most one direction to satisfy the default convention
        if (coin(rng)) {
          edges.emplace_back(u, v);
        } else {
          edges.emplace_back(v, u);
        }
      }
    }
  }
  return DirectedGraph::build(n, std::move(edges));
}

}  // namespace

TEST_CASE("build validates simpleness and ranges") {
  CHECK_NOTHROW(DirectedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}));

  CHECK(code_of([] { DirectedGraph::build(2, {{0, 0}}); }) ==
        ErrorCode::kLoopEdge);
  CHECK(code_of([] { DirectedGraph::build(2, {{0, 1}, {0, 1}}); }) ==
        ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { DirectedGraph::build(2, {{0, 5}}); }) ==
        ErrorCode::kVertexOutOfRange);
  CHECK(code_of([] { DirectedGraph::build(2, {{0, 1}, {1, 0}}); }) ==
        ErrorCode::kAntiParallelPair);
}

TEST_CASE("split convention admits anti-parallel pairs and sums degrees") {
  DirectedGraph g = DirectedGraph::build(2, {{0, 1}, {1, 0}},
                                         DegreeConvention::kSplit);
  CHECK(g.degree_triple(0) == DegreeTriple{2, 1, 1});
  CHECK(g.degree_triple(1) == DegreeTriple{2, 1, 1});
}

TEST_CASE("degree triples") {
  DirectedGraph c5 = directed_cycle(5);
  for (VertexId v = 0; v < 5; ++v) {
    CHECK(c5.degree_triple(v) == DegreeTriple{2, 1, 1});
  }

  DirectedGraph k5 = oriented_complete(5);
  CHECK(k5.degree_triple(0) == DegreeTriple{4, 2, 2});

  // leaf b with parent a
  DirectedGraph leaf = rooted_in_tree({0, {{1, 0}}});
  CHECK(leaf.degree_triple(1) == DegreeTriple{1, 0, 1});
}

TEST_CASE("shortest distances follow edge directions") {
  DirectedGraph c5 = directed_cycle(5);
  auto from0 = shortest_distances(c5, 0);
  CHECK(from0[4] == 4);
  auto from4 = shortest_distances(c5, 4);
  CHECK(from4[0] == 1);  // asymmetric

  DirectedGraph k5 = oriented_complete(5);
  CHECK(shortest_distances(k5, 0)[3] == 2);  // 0 -> 1 -> 3

  DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}});
  CHECK(shortest_distances(tree, 0)[3] == kUnreachable);
  CHECK(shortest_distances(tree, 3)[0] == 2);
}

TEST_CASE("strong connectivity") {
  for (std::uint32_t n = 3; n <= 9; ++n) {
    CHECK(is_strongly_connected(directed_cycle(n)));
  }
  CHECK_FALSE(is_strongly_connected(
      rooted_in_tree({0, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}})));
  // two disjoint triangles
  DirectedGraph two = DirectedGraph::build(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_strongly_connected(two));
}

TEST_CASE("distance cache memoizes and is safe to share") {
  DirectedGraph k7 = oriented_complete(7);
  DistanceCache cache(k7);
  std::vector<std::thread> pool;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&] {
      for (VertexId u = 0; u < 7; ++u) {
        for (VertexId v = 0; v < 7; ++v) {
          if (cache(u, v) != shortest_distances(k7, u)[v]) ++mismatches;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  CHECK(mismatches == 0);
}

TEST_CASE("gamma decomposition fixtures") {
  DirectedGraph k5 = oriented_complete(5);
  DistanceCache dk5(k5);
  // pair (0, 1): out(1) = {2, 3}; d(0,2) = 1 puts 2 in bucket 0 and
  // d(0,3) = 2 puts 3 in plus.
  GammaDecomposition gd = gamma_decomposition(dk5, 0, 1);
  REQUIRE(gd.buckets.size() == 2);
  CHECK(gd.buckets[0] == std::vector<VertexId>{2});
  CHECK(gd.buckets[1].empty());
  CHECK(gd.plus == std::vector<VertexId>{3});

  DirectedGraph c5 = directed_cycle(5);
  DistanceCache dc5(c5);
  GammaDecomposition cycle_gd = gamma_decomposition(dc5, 0, 1);
  REQUIRE(cycle_gd.buckets.size() == 2);
  CHECK(cycle_gd.buckets[0].empty());
  CHECK(cycle_gd.buckets[1].empty());
  CHECK(cycle_gd.plus == std::vector<VertexId>{2});

  // out(y) = {x} lands x in bucket d(x, y)
  GammaDecomposition wrap = gamma_decomposition(dc5, 0, 4);
  REQUIRE(wrap.buckets.size() == 5);
  CHECK(wrap.buckets[4] == std::vector<VertexId>{0});
  CHECK(wrap.plus.empty());
}

TEST_CASE("gamma decomposition errors") {
  DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}}});
  DistanceCache cache(tree);
  CHECK(code_of([&] { gamma_decomposition(cache, 1, 1); }) ==
        ErrorCode::kSameVertex);
  CHECK(code_of([&] { gamma_decomposition(cache, 0, 1); }) ==
        ErrorCode::kInfiniteDistance);
}

TEST_CASE("adjacency and degree invariants on random graphs") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 30; ++trial) {
    VertexId n = 2 + rng() % 9;
    DirectedGraph g = random_simple_digraph(rng, n, 0.45);

    std::size_t out_total = 0, in_total = 0;
    for (VertexId v = 0; v < n; ++v) {
      out_total += g.degree_triple(v).out_degree;
      in_total += g.degree_triple(v).in_degree;
      CHECK(g.degree_triple(v).degree ==
            g.degree_triple(v).in_degree + g.degree_triple(v).out_degree);
    }
    CHECK(out_total == g.edge_count());
    CHECK(in_total == g.edge_count());

    for (const auto& [u, v] : g.edges()) {
      auto out = g.out_neighbors(u);
      auto in = g.in_neighbors(v);
      CHECK(std::count(out.begin(), out.end(), v) == 1);
      CHECK(std::count(in.begin(), in.end(), u) == 1);
    }
  }
}

TEST_CASE("distance invariants on random graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    VertexId n = 3 + rng() % 7;
    DirectedGraph g = random_simple_digraph(rng, n, 0.5);
    DistanceCache d(g);

    bool all_finite = true;
    for (VertexId u = 0; u < n; ++u) {
      CHECK(d(u, u) == 0);
      for (VertexId v = 0; v < n; ++v) {
        if (d(u, v) == kUnreachable) all_finite = false;
      }
    }
    CHECK(all_finite == is_strongly_connected(g));

    for (const auto& [u, v] : g.edges()) CHECK(d(u, v) == 1);

    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        for (VertexId w = 0; w < n; ++w) {
          if (d(u, v) != kUnreachable && d(v, w) != kUnreachable) {
            REQUIRE(d(u, w) != kUnreachable);
            CHECK(d(u, w) <= d(u, v) + d(v, w));
          }
        }
      }
    }
  }
}

TEST_CASE("gamma decomposition partitions out(y) on random graphs") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    VertexId n = 3 + rng() % 7;
    DirectedGraph g = random_simple_digraph(rng, n, 0.5);
    DistanceCache d(g);
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        if (x == y || d(x, y) == kUnreachable) continue;
        GammaDecomposition gd = gamma_decomposition(d, x, y);
        std::set<VertexId> seen;
        std::size_t total = 0;
        for (std::size_t k = 0; k < gd.buckets.size(); ++k) {
          for (VertexId v : gd.buckets[k]) {
            CHECK(d(x, v) == static_cast<Distance>(gd.buckets.size() - 1 - k));
            seen.insert(v);
            ++total;
          }
        }
        for (VertexId v : gd.plus) {
          CHECK(d(x, v) == d(x, y) + 1);
          seen.insert(v);
          ++total;
        }
        auto out = g.out_neighbors(y);
        CHECK(total == out.size());            // pairwise disjoint
        CHECK(seen.size() == out.size());      // union is out(y)
        for (VertexId v : out) CHECK(seen.count(v) == 1);
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
