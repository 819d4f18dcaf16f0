#include <doctest.h>

#include "dtwist/construct.hpp"
#include "dtwist/twist.hpp"
#include "support.hpp"

using namespace dtwist;

TEST_CASE("associated graphs") {
  const BicoloredGraph g = associated_graph(make_box(2, 3, 4));
  CHECK(g.size() == 24);
  CHECK(g.balanced());
  CHECK(g.connected());
  std::size_t edges = 0;
  for (const auto& a : g.adj) edges += a.size();
  CHECK(edges / 2 == 1 * 3 * 4 + 2 * 2 * 4 + 2 * 3 * 3);

  const auto ell = PlanarRegion::make(2, 0, {{0, 0}, {1, 0}, {1, 1}});
  const BicoloredGraph h = associated_graph(ell);
  CHECK(h.size() == 3);
  CHECK_FALSE(h.balanced());
}

TEST_CASE("tree matching on a single edge and on a path") {
  BicoloredGraph g;
  g.color = {-1, 1};
  g.adj = {{1}, {0}};
  MatchingTrace trace;
  const auto m = tree_matching(g, &trace);
  REQUIRE(m.size() == 1);
  CHECK(trace.steps.size() == 1);
  CHECK(trace.steps[0].path == std::vector<int>{0, 1});

  // Path w-b-w-b: two steps, G x I_3 has 12 vertices.
  g.color = {-1, 1, -1, 1};
  g.adj = {{1}, {0, 2}, {1, 3}, {2}};
  trace = {};
  const auto m2 = tree_matching(g, &trace);
  CHECK(m2.size() == 6);
  CHECK(trace.steps.size() == 2);
}

TEST_CASE("tree matching rejects unbalanced or disconnected graphs") {
  BicoloredGraph g;
  g.color = {-1, -1};
  g.adj = {{1}, {0}};
  CHECK_THROWS_AS(tree_matching(g), Error);
  g.color = {-1, 1};
  g.adj = {{}, {}};
  CHECK_THROWS_AS(tree_matching(g), Error);
}

TEST_CASE("algorithm 1 on a 2x2 square in each direction") {
  const auto base = PlanarRegion::make(2, 0, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  for (Dir w : {kPosZ, kNegZ}) {
    MatchingTrace trace;
    const Tiling t = algorithm1(base, w, &trace);
    CHECK(t.region().size() == 12);
    CHECK(t.region().length(2) == 3);
    CHECK(trace.steps.size() == 2);
    CHECK(pretwist(t, w).is_integer());
    CHECK(oracle::pretwist4(t, 2, w.sign()) % 4 == 0);
  }
  CHECK_THROWS_AS(algorithm1(base, kPosX), Error);
  CHECK_THROWS_AS(algorithm1(PlanarRegion::make(2, 0, {{0, 0}, {1, 0}, {1, 1}}), kPosZ), Error);
}

TEST_CASE("find_tiling") {
  CHECK(find_tiling(make_box(3, 3, 3)) == std::nullopt);
  const auto t = find_tiling(make_box(3, 4, 5));
  REQUIRE(t.has_value());
  CHECK(t->size() == 30);
  CHECK_THROWS_AS(find_tiling(make_box(6, 6, 6), 3), Error);
  Tiling w;
  CHECK(is_tileable(oracle::load_fixture("frozen_depth6.txt").region(), &w));
  CHECK(w.size() == 18);
  // Balanced but split into two odd pieces.
  const Region r({Cube{{0, 0, 0}}, Cube{{1, 0, 0}}, Cube{{2, 0, 0}}, Cube{{5, 0, 0}}});
  CHECK_FALSE(is_tileable(r));
}
