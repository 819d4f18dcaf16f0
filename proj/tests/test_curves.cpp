#include <doctest.h>

#include <cmath>

#include "dtwist/curves.hpp"
#include "dtwist/explore.hpp"
#include "support.hpp"

using namespace dtwist;

namespace {

// Closed curve through the given cube corners (in order), as segments
// between doubled centers.
Curve loop(const std::vector<Vec3>& corners) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Vec3 a = corners[i], b = corners[(i + 1) % corners.size()];
    segs.push_back({Cube{a}.center2(), Cube{b}.center2()});
  }
  return Curve::canonical(segs);
}

// Winding number by summing turning angles of the projected polygon.
int angle_winding(const Curve& c, int p1, int p2) {
  double total = 0;
  for (const Segment& s : c.segments) {
    const double a = std::atan2(s.start2.y - p2, s.start2.x - p1);
    const double b = std::atan2(s.end2.y - p2, s.end2.x - p1);
    double d = b - a;
    while (d > M_PI) d -= 2 * M_PI;
    while (d < -M_PI) d += 2 * M_PI;
    total += d;
  }
  return static_cast<int>(std::lround(total / (2 * M_PI)));
}

const std::vector<Vec3> kRing{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {2, 2, 0}, {1, 2, 0}, {0, 2, 0}, {0, 1, 0}};

}  // namespace

TEST_CASE("superposition with the base tiling: nine curves, four trivial") {
  const Tiling t = oracle::load_fixture("curves_depth4.txt");
  const CurveSet cs = gamma(t, base_tiling(t.region_ptr(), 2));
  CHECK(cs.curves.size() == 9);
  CHECK(nontrivial(cs).size() == 5);
  std::size_t segments = 0;
  for (const Curve& c : cs.curves) {
    c.check_closed();
    CHECK(c.size() % 2 == 0);
    segments += c.size();
    // Dimers of t alternate with reversed base dimers, which are parallel to z.
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Segment& s = c.segments[k];
      CHECK(s.is_dimer() != c.segments[(k + 1) % c.size()].is_dimer());
      if (!s.is_dimer()) CHECK(s.dir().axis() == 2);
    }
  }
  CHECK(segments == cs.all_segments.size());
  CHECK(segments == 2 * t.size());
}

TEST_CASE("a tiling against itself gives only trivial curves") {
  const Tiling t = oracle::load_fixture("three_flips.txt");
  const CurveSet cs = gamma(t, t);
  CHECK(cs.curves.size() == t.size());
  CHECK(nontrivial(cs).empty());
}

TEST_CASE("curves of two tilings differing by a flip") {
  const Tiling t = oracle::load_fixture("three_flips.txt");
  for (const Flip& f : flips(t)) {
    const CurveSet cs = gamma(apply_flip(t, f), t);
    REQUIRE(nontrivial(cs).size() == 1);
    CHECK(nontrivial(cs)[0].size() == 4);
  }
}

TEST_CASE("canonical rotation and closure check") {
  const Curve c = loop(kRing);
  CHECK(c.segments.front().start2 == Vec3{1, 1, 1});
  auto segs = c.segments;
  std::rotate(segs.begin(), segs.begin() + 3, segs.end());
  CHECK(Curve::canonical(segs) == c);
  segs.pop_back();
  CHECK_THROWS_AS(Curve{segs}.check_closed(), Error);
  CHECK(to_json(c)["vertices"].size() == 8);
}

TEST_CASE("winding numbers agree with an angle sum") {
  const Curve c = loop(kRing);
  for (int p1 = -3; p1 <= 7; p1 += 2) {
    for (int p2 = -3; p2 <= 7; p2 += 2) {
      bool on = false;
      for (const Vec3& v : c.vertices()) on = on || (v.x == p1 && v.y == p2);
      if (on) {
        CHECK_THROWS_AS(winding(c, kPosZ, {p1, p2, 0}), Error);
        continue;
      }
      CHECK(std::abs(winding(c, kPosZ, {p1, p2, 1})) == std::abs(angle_winding(c, p1, p2)));
    }
  }
  CHECK(std::abs(winding(c, kPosZ, {3, 3, 1})) == 1);
  CHECK(winding(c, kNegZ, {3, 3, 1}) == -winding(c, kPosZ, {3, 3, 1}));
  std::vector<Segment> rev;
  for (auto it = c.segments.rbegin(); it != c.segments.rend(); ++it) rev.push_back(it->reversed());
  CHECK(winding(Curve::canonical(rev), kPosZ, {3, 3, 1}) == -winding(c, kPosZ, {3, 3, 1}));
  CHECK_THROWS_AS(winding(c, kPosZ, {2, 3, 1}), Error);
}

TEST_CASE("winding sign follows the basis orientation") {
  const Curve c = loop(kRing);
  const int w = winding(c, kPosZ, {3, 3, 1});
  CHECK(w == angle_winding(c, 3, 3));
}
