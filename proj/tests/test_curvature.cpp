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
#include <set>

#include "core/curvature.hpp"
#include "core/error.hpp"
#include "core/families.hpp"
#include "core/measure.hpp"

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

TEST_CASE("alpha-curvature fixtures") {
  DirectedGraph c5 = directed_cycle(5);
  DistanceCache dc(c5);
  DirectedGraph k5 = oriented_complete(5);
  DistanceCache dk(k5);

  SUBCASE("alpha = 1 annihilates") {
    CHECK(alpha_ricci(dc, 0, 1, Rational(1)) == 0);
    CHECK(alpha_ricci(dc, 0, 3, Rational(1)) == 0);
    CHECK(alpha_ricci(dk, 0, 1, Rational(1)) == 0);
    CHECK(alpha_ricci(dk, 1, 4, Rational(1)) == 0);
  }
  SUBCASE("cycle edge at alpha = 1/2") {
    CHECK(alpha_ricci(dc, 0, 1, Rational(1, 2)) == 0);
  }
  SUBCASE("tournament successor edge at alpha = 1/2 is 1/8") {
    CHECK(alpha_ricci(dk, 0, 1, Rational(1, 2)) == Rational(1, 8));
  }
}

TEST_CASE("limit curvature fixtures") {
  SUBCASE("every cycle edge is flat") {
    for (std::uint32_t n = 3; n <= 8; ++n) {
      DirectedGraph cn = directed_cycle(n);
      DistanceCache d(cn);
      for (const auto& [x, y] : cn.edges()) CHECK(ricci(d, x, y) == 0);
    }
  }
  SUBCASE("tree leaf edge with heavy head") {
    // root 0, children {1, 2}, vertex 1 has children {3, 4}; edge (3, 1)
    // has d_3 = 1 and d_1 = 3.
    DirectedGraph tree =
        rooted_in_tree({0, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}});
    DistanceCache d(tree);
    CHECK(ricci(d, 3, 1) == Rational(2, 3));
  }
  SUBCASE("tournament edges split 1/4 and 0") {
    DirectedGraph k5 = oriented_complete(5);
    DistanceCache d(k5);
    CHECK(ricci(d, 0, 1) == Rational(1, 4));
    CHECK(ricci(d, 0, 2) == 0);
  }
}

TEST_CASE("limit curvature errors") {
  DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}}});
  DistanceCache d(tree);
  CHECK(code_of([&] { ricci(d, 1, 1); }) == ErrorCode::kSameVertex);
  CHECK(code_of([&] { ricci(d, 0, 1); }) == ErrorCode::kInfiniteDistance);
}

TEST_CASE("ladder stabilizes onto the limit") {
  DirectedGraph c5 = directed_cycle(5);
  DistanceCache dc(c5);
  LadderResult flat = ricci_ladder(dc, 0, 1);
  CHECK(flat.value == 0);
  for (const auto& rung : flat.trace) CHECK(rung.h == 0);

  DirectedGraph k5 = oriented_complete(5);
  DistanceCache dk(k5);
  LadderResult successor = ricci_ladder(dk, 0, 1);
  CHECK(successor.value == Rational(1, 4));
  CHECK(successor.trace.front().alpha == Rational(7, 8));
  CHECK(successor.trace.front().h == Rational(1, 4));

  CHECK(ricci_ladder(dk, 0, 2).value == 0);
}

TEST_CASE("upper bound fixtures") {
  DirectedGraph c5 = directed_cycle(5);
  DistanceCache dc(c5);
  CHECK(curvature_upper_bound(dc, 0, 1) == 0);

  DirectedGraph k5 = oriented_complete(5);
  DistanceCache dk(k5);
  CHECK(curvature_upper_bound(dk, 0, 1) == Rational(1, 4));

  DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}});
  DistanceCache dt(tree);
  CHECK(curvature_upper_bound(dt, 3, 1) == Rational(2, 3));

  // Wrap-around pair on the cycle: out(4) = {0} sits in bucket d(0, 4),
  // which the sum must include for the bound to stay valid; here it is
  // tight at 5/8.
  CHECK(curvature_upper_bound(dc, 0, 4) == Rational(5, 8));
  CHECK(ricci(dc, 0, 4) == Rational(5, 8));
}

TEST_CASE("bound dominates the limit on all pairs of the families") {
  std::vector<DirectedGraph> graphs;
  graphs.push_back(directed_cycle(6));
  graphs.push_back(oriented_complete(7));
  graphs.push_back(cycle_product(3, 4));
  graphs.push_back(circulant(8, {1, 3}));
  for (const auto& g : graphs) {
    DistanceCache d(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        CHECK(ricci(d, x, y) <= curvature_upper_bound(d, x, y));
      }
    }
  }
}

TEST_CASE("whole-graph report") {
  SUBCASE("cycle is flat and constant") {
    DirectedGraph c7 = directed_cycle(7);
    DistanceCache d(c7);
    CurvatureReport report = curvature_report(d);
    CHECK(report.per_edge.size() == 7);
    CHECK(report.is_ricci_flat);
    CHECK(report.is_constant);
    CHECK(*report.constant_value == 0);
  }
  SUBCASE("tournament attains 0 and 1/4") {
    DirectedGraph k5 = oriented_complete(5);
    DistanceCache d(k5);
    CurvatureReport report = curvature_report(d);
    CHECK(report.per_edge.size() == 10);
    CHECK_FALSE(report.is_constant);
    CHECK_FALSE(report.is_ricci_flat);
    CHECK(report.min == 0);
    CHECK(report.max == Rational(1, 4));
    std::set<Rational> attained;
    for (const auto& [e, kappa] : report.per_edge) attained.insert(kappa);
    CHECK(attained == std::set<Rational>{Rational(0), Rational(1, 4)});
    // edges arrive in ascending order
    for (std::size_t i = 1; i < report.per_edge.size(); ++i) {
      CHECK(report.per_edge[i - 1].first < report.per_edge[i].first);
    }
  }
  SUBCASE("cycle product is flat") {
    DirectedGraph product = cycle_product(3, 4);
    DistanceCache d(product);
    CHECK(curvature_report(d).is_ricci_flat);
  }
  SUBCASE("an edgeless graph is vacuously flat") {
    DirectedGraph lonely = DirectedGraph::build(1, {});
    DistanceCache d(lonely);
    CurvatureReport report = curvature_report(d);
    CHECK(report.per_edge.empty());
    CHECK(report.is_ricci_flat);
    CHECK(report.is_constant);
  }
  SUBCASE("disconnected input is rejected") {
    DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}}});
    DistanceCache d(tree);
    CHECK(code_of([&] { curvature_report(d); }) ==
          ErrorCode::kNotStronglyConnected);
  }
}

TEST_CASE("condition checkers") {
  DirectedGraph k5 = oriented_complete(5);
  DirectedGraph product = cycle_product(3, 4);
  DirectedGraph c6 = directed_cycle(6);

  SUBCASE("disjoint out-neighborhoods fails on the tournament") {
    ConditionVerdict verdict =
        check_condition(k5, Condition::kDisjointOutNeighborhoods);
    CHECK_FALSE(verdict.holds);
    REQUIRE(!verdict.witnesses.empty());
    // first witness in edge order: edge (0, 1) shares vertex 2
    CHECK(verdict.witnesses.front() ==
          std::vector<std::uint32_t>{0, 1, 2});
  }
  SUBCASE("cycle product satisfies A, equal out-degrees, and matchings") {
    for (Condition c :
         {Condition::kDisjointOutNeighborhoods, Condition::kEqualOutDegree,
          Condition::kOutNeighborhoodMatching}) {
      ConditionVerdict verdict = check_condition(product, c);
      CHECK(verdict.holds);
      CHECK(verdict.witnesses.empty());
    }
    CHECK(product.degree_triple(0).out_degree == 2);
  }
  SUBCASE("cycle product fails the unique-intermediary condition") {
    // Mixed adjacent pair (0,0) -> (1,0) -> (1,1): both (1,0) and (0,1)
    // lie in out((0,0)) and in((1,1)). With h = 4 those are vertices 4
    // and 1, met first from edge (0, 1) with z = 5.
    ConditionVerdict verdict =
        check_condition(product, Condition::kUniqueIntermediary);
    CHECK_FALSE(verdict.holds);
    REQUIRE(!verdict.witnesses.empty());
    CHECK(verdict.witnesses.front() ==
          std::vector<std::uint32_t>{0, 1, 5, 4});
  }
  SUBCASE("all four hold on directed cycles") {
    for (Condition c :
         {Condition::kDisjointOutNeighborhoods, Condition::kEqualOutDegree,
          Condition::kOutNeighborhoodMatching,
          Condition::kUniqueIntermediary}) {
      CHECK(check_condition(c6, c).holds);
    }
  }
  SUBCASE("unique intermediary fails on the tournament") {
    ConditionVerdict verdict =
        check_condition(k5, Condition::kUniqueIntermediary);
    CHECK_FALSE(verdict.holds);
  }
  SUBCASE("equal out-degree fails on the even tournament") {
    ConditionVerdict verdict =
        check_condition(oriented_complete(4), Condition::kEqualOutDegree);
    CHECK_FALSE(verdict.holds);
    // witnesses carry (vertex, out-degree) rows, starting with vertex 0
    REQUIRE(verdict.witnesses.size() >= 2);
    CHECK(verdict.witnesses.front() == std::vector<std::uint32_t>{0, 2});
  }
  SUBCASE("matching fails when a neighborhood cannot move across edges") {
    // out(0) = {1, 2}, out(1) = {3, 4}; vertex 2 has no edge into {3, 4},
    // so edge (0, 1) admits no bijection.
    DirectedGraph g = DirectedGraph::build(
        6,
        {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 0}, {4, 0}, {5, 0}});
    REQUIRE(is_strongly_connected(g));
    ConditionVerdict verdict =
        check_condition(g, Condition::kOutNeighborhoodMatching);
    CHECK_FALSE(verdict.holds);
    bool found = false;
    for (const auto& w : verdict.witnesses) {
      if (w == std::vector<std::uint32_t>{0, 1}) found = true;
    }
    CHECK(found);
  }
  SUBCASE("connectivity preconditions") {
    DirectedGraph tree = rooted_in_tree({0, {{1, 0}, {2, 0}}});
    CHECK(code_of([&] {
            check_condition(tree, Condition::kOutNeighborhoodMatching);
          }) == ErrorCode::kNotStronglyConnected);
    CHECK(code_of([&] {
            check_condition(tree, Condition::kUniqueIntermediary);
          }) == ErrorCode::kNotStronglyConnected);
  }
}

TEST_CASE("split degree convention keeps curvature defined") {
  // 0 <-> 1 anti-parallel plus a return path through 2. Under the split
  // convention d_0 = 3 (out {1}, in {1, 2}) and d_1 = 3 (out {0, 2}, in
  // {0}); the limit solve gives W = 1 - (1/3) e on edge (0, 1).
  DirectedGraph g = DirectedGraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}},
                                         DegreeConvention::kSplit);
  REQUIRE(is_strongly_connected(g));
  DistanceCache d(g);
  CHECK(ricci(d, 0, 1) == Rational(1, 3));

  SparseMeasure mu = build_walk_measure(g, 0, one_minus_epsilon());
  SparseMeasure nu = build_walk_measure(g, 1, one_minus_epsilon());
  auto dist = [&d](VertexId u, VertexId v) { return d(u, v); };
  CHECK(oracle_wasserstein(mu, nu, dist) ==
        Scalar(Rational(1), Rational(-1, 3)));
}

TEST_CASE("concavity of the alpha-curvature") {
  std::vector<DirectedGraph> graphs;
  graphs.push_back(directed_cycle(5));
  graphs.push_back(oriented_complete(5));
  graphs.push_back(cycle_product(3, 3));
  std::vector<Rational> alphas = {Rational(0), Rational(1, 4), Rational(1, 2),
                                  Rational(3, 4)};
  for (const auto& g : graphs) {
    DistanceCache d(g);
    for (const auto& [x, y] : g.edges()) {
      std::vector<Rational> kappa;
      for (const auto& a : alphas) kappa.push_back(alpha_ricci(d, x, y, a));
      // evenly spaced points: concavity means 2 k2 >= k1 + k3
      for (std::size_t i = 1; i + 1 < kappa.size(); ++i) {
        CHECK(2 * kappa[i] >= kappa[i - 1] + kappa[i + 1]);
      }
    }
  }
}

TEST_CASE("edge curvature propagates to all pairs") {
  std::vector<DirectedGraph> graphs;
  graphs.push_back(directed_cycle(6));
  graphs.push_back(oriented_complete(5));
  graphs.push_back(cycle_product(3, 3));
  for (const auto& g : graphs) {
    DistanceCache d(g);
    Rational min_edge;
    bool first = true;
    for (const auto& [x, y] : g.edges()) {
      Rational k = ricci(d, x, y);
      if (first || k < min_edge) min_edge = k;
      first = false;
    }
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (x != y) CHECK(ricci(d, x, y) >= min_edge);
      }
    }
  }
}

TEST_CASE("regular condition-A graphs with out-degree one obey the"
          " closed form") {
  // kappa(x, y) = (1 - d_y_out) / d on such edges; directed cycles have
  // d = 2 and d_y_out = 1, so every edge vanishes.
  for (std::uint32_t n : {3u, 5u, 9u}) {
    DirectedGraph cn = directed_cycle(n);
    REQUIRE(check_condition(cn, Condition::kDisjointOutNeighborhoods).holds);
    DistanceCache d(cn);
    for (const auto& [x, y] : cn.edges()) {
      const DegreeTriple& dy = cn.degree_triple(y);
      CHECK(ricci(d, x, y) ==
            Rational(1 - static_cast<int>(dy.out_degree),
                     cn.degree_triple(x).degree));
    }
  }
}
