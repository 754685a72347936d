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

#include <functional>

#include "core/error.hpp"
#include "core/families.hpp"

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

}  // namespace

TEST_CASE("oriented complete graphs") {
  SUBCASE("n = 5 matches the documented orientation") {
    std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                  {2, 4}, {3, 0}, {3, 4}, {4, 0}, {4, 1}};
    CHECK(oriented_complete(5).edges() == expected);
  }
  SUBCASE("n = 4 drops the last row and column of the n = 5 case") {
    std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 2},
                                  {1, 3}, {2, 3}, {3, 0}};
    CHECK(oriented_complete(4).edges() == expected);
  }
  SUBCASE("n = 3 is the directed triangle") {
    CHECK(oriented_complete(3).edges() == directed_cycle(3).edges());
  }
  SUBCASE("tournament: one direction per pair") {
    for (std::uint32_t n = 3; n <= 9; ++n) {
      DirectedGraph g = oriented_complete(n);
      CHECK(g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2);
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
          CHECK((g.has_edge(u, v) != g.has_edge(v, u)));
        }
      }
    }
  }
  SUBCASE("odd case is (2m, m, m)-regular") {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      DirectedGraph g = oriented_complete(2 * m + 1);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.degree_triple(v) == DegreeTriple{2 * m, m, m});
      }
    }
  }
  SUBCASE("n too small") {
    CHECK(code_of([] { oriented_complete(2); }) == ErrorCode::kNTooSmall);
  }
}

TEST_CASE("directed cycles") {
  DirectedGraph c3 = directed_cycle(3);
  CHECK(c3.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  DirectedGraph c5 = directed_cycle(5);
  CHECK(is_strongly_connected(c5));
  CHECK(shortest_distances(c5, 0)[4] == 4);
  for (VertexId v = 0; v < 5; ++v) {
    CHECK(c5.degree_triple(v) == DegreeTriple{2, 1, 1});
  }
  CHECK(code_of([] { directed_cycle(2); }) == ErrorCode::kNTooSmall);
}

TEST_CASE("rooted in-trees") {
  SUBCASE("single edge succeeds even though no head avoids the root") {
    DirectedGraph path = rooted_in_tree({1, {{0, 1}}});
    CHECK(path.edge_count() == 1);
    CHECK(path.degree_triple(1).out_degree == 0);
  }
  SUBCASE("root out-degree is zero, everyone else one") {
    DirectedGraph g = rooted_in_tree({0, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}});
    CHECK(g.degree_triple(0).out_degree == 0);
    for (VertexId v = 1; v < 5; ++v) {
      CHECK(g.degree_triple(v).out_degree == 1);
    }
    CHECK_FALSE(is_strongly_connected(g));
  }
  SUBCASE("cyclic parent maps are rejected") {
    CHECK(code_of([] {
            rooted_in_tree({0, {{1, 2}, {2, 1}}});
          }) == ErrorCode::kCyclicParentMap);
    CHECK(code_of([] {
            rooted_in_tree({0, {{0, 1}, {2, 0}}});  // root with a parent
          }) == ErrorCode::kCyclicParentMap);
    CHECK(code_of([] {
            rooted_in_tree({3, {{0, 3}, {1, 3}}});  // vertex 2 unparented
          }) == ErrorCode::kCyclicParentMap);
  }
}

TEST_CASE("cycle products") {
  DirectedGraph p33 = cycle_product(3, 3);
  CHECK(p33.vertex_count() == 9);
  CHECK(p33.edge_count() == 18);
  for (VertexId v = 0; v < 9; ++v) {
    CHECK(p33.degree_triple(v) == DegreeTriple{4, 2, 2});
  }
  CHECK(is_strongly_connected(p33));
  CHECK(is_strongly_connected(cycle_product(3, 4)));
  CHECK(code_of([] { cycle_product(2, 4); }) == ErrorCode::kNTooSmall);
}

TEST_CASE("circulants") {
  SUBCASE("offset {1} is the directed cycle") {
    for (std::uint32_t n : {3u, 5u, 8u}) {
      CHECK(circulant(n, {1}).edges() == directed_cycle(n).edges());
    }
  }
  SUBCASE("offsets {1, 2} on five vertices is the tournament") {
    CHECK(circulant(5, {1, 2}).edges() == oriented_complete(5).edges());
  }
  SUBCASE("offsets {2, 3} on seven vertices") {
    DirectedGraph g = circulant(7, {2, 3});
    CHECK(is_strongly_connected(g));  // gcd(7, 2, 3) = 1
    for (VertexId v = 0; v < 7; ++v) {
      CHECK(g.degree_triple(v).out_degree == 2);
    }
  }
  SUBCASE("gcd > 1 leaves the graph disconnected") {
    CHECK_FALSE(is_strongly_connected(circulant(6, {2})));
    CHECK_FALSE(is_strongly_connected(circulant(9, {3})));
  }
  SUBCASE("offset validation") {
    CHECK(code_of([] { circulant(6, {}); }) == ErrorCode::kEmptyOffsets);
    CHECK(code_of([] { circulant(6, {2, 4}); }) ==
          ErrorCode::kAntiParallelOffsets);
    CHECK(code_of([] { circulant(8, {4}); }) ==
          ErrorCode::kAntiParallelOffsets);  // 4 = 8 - 4
    // an even-n offset n/2 pairs with itself, so this one cannot exist
    CHECK(code_of([] { circulant(6, {2, 3}); }) ==
          ErrorCode::kAntiParallelOffsets);
    CHECK(code_of([] { circulant(6, {0}); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([] { circulant(6, {6}); }) == ErrorCode::kInvalidArgument);
  }
}
