#include <doctest.h>

#include <set>

#include "dtwist/geometry.hpp"
#include "support.hpp"

using namespace dtwist;

TEST_CASE("cube colors follow coordinate parity") {
  CHECK(Cube{{0, 0, 0}}.white());
  CHECK(Cube{{1, 0, 0}}.black());
  CHECK(Cube{{1, 1, 0}}.white());
  CHECK(Cube{{1, 1, 1}}.black());
  CHECK(Cube{{-1, 0, 0}}.black());
  CHECK(Cube{{0, 0, 0}}.center2() == Vec3{1, 1, 1});
}

TEST_CASE("the 24 bases are distinct and positively oriented") {
  std::set<std::array<int, 3>> seen;
  for (const Basis& b : Basis::all()) {
    CHECK(det(b.b1.vec(), b.b2.vec(), b.b3.vec()) == 1);
    seen.insert({b.b1.index(), b.b2.index(), b.b3.index()});
  }
  CHECK(seen.size() == 24);
  for (Dir u : kAllDirs) CHECK(Basis::with_third(u).b3 == u);
  CHECK_FALSE(Basis::valid(kPosY, kPosX, kPosZ));
}

TEST_CASE("region indexing and neighbours") {
  const Region r = make_box(2, 3, 4);
  CHECK(r.size() == 24);
  CHECK(r.black_count() == 12);
  const int i = r.index_of(Cube{{0, 1, 2}});
  REQUIRE(i != Region::kNoCube);
  CHECK(r.cube(r.neighbor(i, kPosX)) == Cube{{1, 1, 2}});
  CHECK(r.neighbor(i, kNegX) == Region::kNoCube);
  CHECK(r.length(2) == 4);
  CHECK(r.translated({5, 0, 0}).bounds().lo == Vec3{5, 0, 0});
  CHECK(r.minus(make_box({0, 0, 0}, {1, 1, 1})).size() == 23);
  CHECK(r.united(make_box({2, 0, 0}, {3, 1, 1})).size() == 25);
}

TEST_CASE("region rejects duplicate cubes when asked to") {
  CHECK_THROWS_AS(Region::from_unique({Cube{{0, 0, 0}}, Cube{{0, 0, 0}}}), Error);
  CHECK(Region({Cube{{0, 0, 0}}, Cube{{0, 0, 0}}}).size() == 1);
}

TEST_CASE("planar connectivity") {
  const std::vector<std::pair<int, int>> ring{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  CHECK(is_connected(ring));
  CHECK_FALSE(is_simply_connected(ring));
  const std::vector<std::pair<int, int>> ell{{0, 0}, {1, 0}, {1, 1}};
  CHECK(is_simply_connected(ell));
  const std::vector<std::pair<int, int>> split{{0, 0}, {2, 0}};
  CHECK_FALSE(is_connected(split));
  // Diagonal contact does not connect interiors.
  const std::vector<std::pair<int, int>> diag{{0, 0}, {1, 1}};
  CHECK_FALSE(is_connected(diag));
}

TEST_CASE("classification of fixture regions") {
  CHECK(classify(make_box(2, 3, 4)).kind == Classification::Kind::Box);
  CHECK(classify(make_box(2, 3, 4)).cylinder_axes().size() == 3);

  const auto ring = classify(oracle::load_fixture("pseudocylinder_ring.txt").region());
  CHECK(ring.kind == Classification::Kind::Pseudocylinder);
  CHECK(ring.pseudocylinder_axes() == std::vector<int>{2});
  CHECK_FALSE(ring.is_cylinder());

  const auto f3 = classify(oracle::load_fixture("frozen_depth3.txt").region());
  CHECK(f3.kind == Classification::Kind::Cylinder);
  REQUIRE(f3.find(2) != nullptr);
  CHECK(f3.find(2)->depth == 3);
  CHECK(f3.find(2)->base.squares.size() == 6);

  CHECK(classify(oracle::load_fixture("two_dominoes.txt").region()).kind == Classification::Kind::Other);
}

TEST_CASE("cylinders from planar bases") {
  const auto base = PlanarRegion::make(0, 2, {{0, 0}, {0, 1}, {1, 1}});
  const Region r = make_cylinder(base, kNegX, 2);
  CHECK(r.size() == 6);
  CHECK(r.bounds().lo.x == 0);
  CHECK(r.bounds().hi.x == 2);
  CHECK(classify(r).find(0) != nullptr);
  CHECK_THROWS_AS(make_cylinder(base, kPosZ, 2), Error);
}

TEST_CASE("boxes are fully balanced") {
  CHECK(is_fully_balanced(make_box(3, 2, 4)));
  CHECK(is_fully_balanced(make_box(4, 4, 4)));
}

TEST_CASE("axis names") {
  CHECK(parse_axis("y") == 1);
  CHECK_FALSE(parse_axis("w").has_value());
  CHECK(to_string(kNegZ) == "-z");
}
