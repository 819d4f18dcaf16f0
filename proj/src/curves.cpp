#include "dtwist/curves.hpp"

#include <algorithm>

namespace dtwist {

std::vector<Vec3> Curve::vertices() const {
  std::vector<Vec3> out;
  out.reserve(segments.size());
  for (const Segment& s : segments) out.push_back(s.start2);
  return out;
}

Curve Curve::canonical(std::vector<Segment> segments) {
  auto first = std::min_element(segments.begin(), segments.end(),
                                [](const Segment& a, const Segment& b) { return a.start2 < b.start2; });
  std::rotate(segments.begin(), first, segments.end());
  Curve c{std::move(segments)};
  c.check_closed();
  return c;
}

void Curve::check_closed() const {
  if (segments.empty()) fail(ErrorCode::InvalidArgument, "empty curve");
  for (std::size_t k = 0; k < segments.size(); ++k)
    if (segments[k].end2 != segments[(k + 1) % segments.size()].start2) fail(ErrorCode::InvalidArgument, "curve is not closed");
}

CurveSet gamma(const Tiling& t0, const Tiling& t1) {
  if (!(t0.region() == t1.region())) fail(ErrorCode::InvalidArgument, "gamma needs two tilings of the same region");
  const Region& r = t0.region();
  CurveSet cs;
  cs.all_segments = to_dimers(t0);
  for (const Segment& s : to_dimers(t1)) cs.all_segments.push_back(s.reversed());
  std::vector<char> seen(r.size(), 0);
  for (int start = 0; start < static_cast<int>(r.size()); ++start) {
    if (seen[static_cast<std::size_t>(start)] || !r.cube(start).white()) continue;
    std::vector<Segment> segs;
    int w = start;
    do {
      const int b = t0.partner(w);
      const int next = t1.partner(b);
      seen[static_cast<std::size_t>(w)] = seen[static_cast<std::size_t>(b)] = 1;
      segs.push_back({r.cube(w).center2(), r.cube(b).center2()});
      segs.push_back({r.cube(b).center2(), r.cube(next).center2()});
      w = next;
    } while (w != start);
    cs.curves.push_back(Curve::canonical(std::move(segs)));
  }
  std::sort(cs.curves.begin(), cs.curves.end());
  return cs;
}

std::vector<Curve> nontrivial(const CurveSet& cs) {
  std::vector<Curve> out;
  for (const Curve& c : cs.curves)
    if (!c.trivial()) out.push_back(c);
  return out;
}

int winding(const Curve& c, Dir axis, Vec3 point2) {
  const Basis basis = Basis::with_third(axis);
  const Vec3 b1 = basis.b1.vec(), b2 = basis.b2.vec(), w = axis.vec();
  const int p1 = dot(point2, b1), p2 = dot(point2, b2);
  if (p1 % 2 == 0 || p2 % 2 == 0) fail(ErrorCode::InvalidArgument, "winding point must have half-integer coordinates");
  int sum = 0;
  for (const Segment& s : c.segments) {
    const int s1 = dot(s.start2, b1), s2 = dot(s.start2, b2);
    const int e1 = dot(s.end2, b1), e2 = dot(s.end2, b2);
    if (std::min(s1, e1) <= p1 && p1 <= std::max(s1, e1) && std::min(s2, e2) <= p2 && p2 <= std::max(s2, e2))
      fail(ErrorCode::DegenerateInput, "point lies on the projected curve");
    if (s1 != e1 || s1 <= p1) continue;  // only b2-segments to the right of the point
    if (s2 == p2 || e2 == p2) sum += det(s.v(), w, b1);
  }
  if (sum % 2 != 0) fail(ErrorCode::InvariantViolation, "odd ray crossing count");
  return sum / 2;
}

nlohmann::json to_json(const Curve& c) {
  nlohmann::json vs = nlohmann::json::array();
  for (const Vec3& v : c.vertices()) vs.push_back({v.x, v.y, v.z});
  return {{"scale", 2}, {"vertices", vs}, {"trivial", c.trivial()}};
}

}  // namespace dtwist
