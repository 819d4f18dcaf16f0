#include <doctest.h>

#include "dtwist/explore.hpp"
#include "dtwist/knot.hpp"
#include "support.hpp"

using namespace dtwist;

namespace {

Curve loop(const std::vector<Vec3>& corners) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < corners.size(); ++i)
    segs.push_back({Cube{corners[i]}.center2(), Cube{corners[(i + 1) % corners.size()]}.center2()});
  return Curve::canonical(segs);
}

Curve reversed(const Curve& c) {
  std::vector<Segment> rev;
  for (auto it = c.segments.rbegin(); it != c.segments.rend(); ++it) rev.push_back(it->reversed());
  return Curve::canonical(rev);
}

// Square ring around cube (1,1,0) in the plane z = 0.
const Curve kA = loop({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {2, 2, 0}, {1, 2, 0}, {0, 2, 0}, {0, 1, 0}});
// Ring around cube (2,1,0) in the plane y = 1, threading through kA.
const Curve kB = loop({{1, 1, -1}, {2, 1, -1}, {3, 1, -1}, {3, 1, 0}, {3, 1, 1}, {2, 1, 1}, {1, 1, 1}, {1, 1, 0}});
// The same ring moved away so that it does not link kA.
const Curve kFar = loop({{5, 1, -1}, {6, 1, -1}, {7, 1, -1}, {7, 1, 0}, {7, 1, 1}, {6, 1, 1}, {5, 1, 1}, {5, 1, 0}});

}  // namespace

TEST_CASE("slant admissibility") {
  const Basis b = Basis::with_third(kPosZ);
  CHECK_NOTHROW(SlantProjection::make(b, Rational(1, 5), Rational(-1, 5), 4));
  CHECK_THROWS_AS(SlantProjection::make(b, Rational(1, 4), Rational(1, 5), 4), Error);
  CHECK_THROWS_AS(SlantProjection::make(b, Rational(0), Rational(1, 5), 4), Error);
  const auto s = SlantProjection::standard(b, 4, 1, -1);
  CHECK(s.a == Rational(1, 5));
  CHECK(s.b == Rational(-1, 5));
}

TEST_CASE("a transversal crossing of two segments") {
  const auto p = SlantProjection::standard(Basis::with_third(kPosZ), 3);
  const Segment lo{{1, 3, 1}, {3, 3, 1}};   // along x at z = 0
  const Segment hi{{3, 3, 3}, {3, 5, 3}};   // along y at z = 1
  const auto c = crossing(p, lo, hi);
  REQUIRE(c.has_value());
  CHECK(c->sign != 0);
  CHECK(slanted_tau(p, lo, hi) == det(hi.v(), lo.v(), kPosZ.vec()));
  CHECK(slanted_tau(p, hi, lo) == 0);
  const Segment far{{9, 1, 3}, {9, 3, 3}};
  CHECK_FALSE(crossing(p, lo, far).has_value());
}

TEST_CASE("linking numbers of a Hopf link are projection independent") {
  const long long lk = linking_number(kA, kB, Basis::with_third(kPosZ));
  CHECK(std::abs(lk) == 1);
  for (const Basis& b : Basis::all()) {
    CHECK(linking_number(kA, kB, b) == lk);
    CHECK(linking_number(kB, kA, b) == lk);
    CHECK(linking_number(kA, reversed(kB), b) == -lk);
    CHECK(linking_number(kA, kFar, b) == 0);
  }
}

TEST_CASE("linking curves that touch is an error") {
  try {
    linking_number(kA, kA, Basis::with_third(kPosZ));
    FAIL("expected not-disjoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDisjoint);
  }
}

TEST_CASE("a planar loop has no writhe") {
  for (const Basis& b : Basis::all()) {
    const int n = 3;
    CHECK(directional_writhe(kA, b, Rational(1, n + 1), Rational(1, n + 1)) == 0);
  }
}

TEST_CASE("tau via slants equals tau on all dimer pairs of a box") {
  for (const Tiling& t : enumerate_all(make_box(2, 2, 4))) {
    const auto ds = to_dimers(t);
    for (Dir u : kAxisDirs) {
      const int len = t.region().length(u.axis());
      for (const Segment& a : ds)
        for (const Segment& b : ds) REQUIRE(tau_via_slants(u, a, b, len) == tau(u, a, b));
    }
  }
}

TEST_CASE("writhe splitting and the eta sum") {
  const Tiling t = oracle::load_fixture("curves_depth4.txt");
  const Basis basis = Basis::with_third(kPosZ);
  for (const Curve& g : nontrivial(gamma(t, base_tiling(t.region_ptr(), 2)))) {
    const auto [plus, minus] = wr_pm(g, basis);
    long long eta_sum = 0;
    for (std::size_t k = 0; k < g.size(); ++k) eta_sum += eta(basis, g, k);
    CHECK(plus - minus == eta_sum);
    CHECK((plus + minus) % 2 == 0);
  }
}

TEST_CASE("twist through writhe and linking on fixtures") {
  for (const char* name : {"curves_depth4.txt", "frozen_depth6.txt", "three_flips.txt", "shadows.txt", "twist_plus4.txt"}) {
    const Tiling t = oracle::load_fixture(name);
    CHECK_MESSAGE(twist_via_writhe(t) == twist(t), name);
  }
  // The ring pseudocylinder has even depth; the curve formula gives T^z.
  const Tiling ring = oracle::load_fixture("pseudocylinder_ring.txt");
  CHECK(twist_via_writhe(ring, 2) == 1);
}

TEST_CASE("crossings as json") {
  const auto p = SlantProjection::standard(Basis::with_third(kPosZ), 3);
  const Segment lo{{1, 3, 1}, {3, 3, 1}};
  const Segment hi{{3, 3, 3}, {3, 5, 3}};
  const std::vector<Segment> a{lo}, b{hi};
  const auto j = crossings_json(p, a, b);
  REQUIRE(j.size() == 1);
  CHECK(j[0].contains("sign"));
}
