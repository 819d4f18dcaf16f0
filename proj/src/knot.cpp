#include "dtwist/knot.hpp"

#include <algorithm>
#include <set>

namespace dtwist {

namespace {

struct RVec {
  Rational x, y, z;
};

Rational rdet(const RVec& a, const RVec& b, const RVec& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}

RVec rvec(Vec3 v) { return {Rational(v.x), Rational(v.y), Rational(v.z)}; }

RVec kernel(const SlantProjection& p) {
  const Vec3 b1 = p.basis.b1.vec(), b2 = p.basis.b2.vec(), b3 = p.basis.b3.vec();
  return {b3.x + p.a * b1.x + p.b * b2.x, b3.y + p.a * b1.y + p.b * b2.y, b3.z + p.a * b1.z + p.b * b2.z};
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

SlantProjection SlantProjection::make(Basis basis, Rational a, Rational b, int length) {
  if (length < 1) fail(ErrorCode::InvalidArgument, "projection length must be positive");
  const Rational bound(1, length);
  if (a.numerator() == 0 || b.numerator() == 0 || boost::abs(a) >= bound || boost::abs(b) >= bound)
    fail(ErrorCode::InvalidArgument, "slant must satisfy 0 < |a|,|b| < 1/N");
  return SlantProjection{basis, a, b, length};
}

SlantProjection SlantProjection::standard(Basis basis, int length, int sa, int sb) {
  return make(basis, Rational(sa, length + 1), Rational(sb, length + 1), length);
}

std::optional<Crossing> crossing(const SlantProjection& p, const Segment& l0, const Segment& l1) {
  // Solve s1 v1 - s0 v0 - c k = l0(0) - l1(0).
  const RVec v1 = rvec(l1.v()), v0 = rvec(l0.v()), k = kernel(p);
  const RVec nv0{-v0.x, -v0.y, -v0.z}, nk{-k.x, -k.y, -k.z};
  const Vec3 d2 = l0.start2 - l1.start2;
  const RVec rhs{Rational(d2.x, 2), Rational(d2.y, 2), Rational(d2.z, 2)};
  // Columns of the system matrix are v1, -v0, -k; det of columns = det of rows.
  auto col_det = [](const RVec& c0, const RVec& c1, const RVec& c2) {
    return rdet(RVec{c0.x, c1.x, c2.x}, RVec{c0.y, c1.y, c2.y}, RVec{c0.z, c1.z, c2.z});
  };
  const Rational m = col_det(v1, nv0, nk);
  if (m.numerator() == 0) return std::nullopt;
  const Rational s1 = col_det(rhs, nv0, nk) / m;
  const Rational s0 = col_det(v1, rhs, nk) / m;
  const Rational c = col_det(v1, nv0, rhs) / m;
  // Integer comparisons go through numerator/denominator: Boost's mixed
  // rational == int overloads recurse under C++20 rewritten comparisons.
  auto is = [](const Rational& r, long long v) { return r.denominator() == 1 && r.numerator() == v; };
  if (s0 < 0 || s0 > 1 || s1 < 0 || s1 > 1 || is(c, 0)) return std::nullopt;
  if (is(s0, 0) || is(s0, 1) || is(s1, 0) || is(s1, 1))
    fail(ErrorCode::DegenerateInput, "projected segments meet at an endpoint");
  const RVec gap{c * k.x, c * k.y, c * k.z};
  const int sign = sgn(rdet(v1, v0, gap));
  if (sign == 0) fail(ErrorCode::DegenerateInput, "crossing is not transversal");
  return Crossing{l0, l1, s0, s1, sign};
}

int slanted_tau(const SlantProjection& p, const Segment& l0, const Segment& l1) {
  const Vec3 b3 = p.basis.b3.vec();
  const int d = det(l1.v(), l0.v(), b3);
  if (d == 0) return 0;
  const int h0 = dot(l0.start2, b3), h1 = dot(l1.start2, b3);
  if (std::abs(h1 - h0) > 2 * p.length) fail(ErrorCode::InvalidArgument, "segments are farther apart than the projection's length bound");
  if (h0 >= h1) return 0;
  return crossing(p, l0, l1) ? d : 0;
}

Quarter tau_via_slants(Dir u, const Segment& l0, const Segment& l1, int length) {
  const Basis basis = Basis::with_third(u);
  long long sum = 0;
  for (int i : {-1, 1})
    for (int j : {-1, 1}) sum += slanted_tau(SlantProjection::standard(basis, length, i, j), l0, l1);
  return Quarter::quarters(sum);
}

long long slanted_pretwist(const SlantProjection& p, std::span<const Segment> a, std::span<const Segment> b) {
  long long sum = 0;
  for (const Segment& l0 : a)
    for (const Segment& l1 : b) sum += slanted_tau(p, l0, l1);
  return sum;
}

int curve_length(std::span<const Curve> curves, Dir b3) {
  int lo = 0, hi = 0;
  bool any = false;
  for (const Curve& c : curves) {
    for (const Segment& s : c.segments) {
      const int h = dot(s.start2, b3.vec());
      lo = any ? std::min(lo, h) : h;
      hi = any ? std::max(hi, h) : h;
      any = true;
    }
  }
  return any ? (hi - lo) / 2 + 1 : 1;
}

long long linking_number(const Curve& g0, const Curve& g1, const Basis& basis) {
  std::set<Vec3> verts;
  for (const Vec3& v : g0.vertices()) verts.insert(v);
  for (const Vec3& v : g1.vertices())
    if (verts.count(v)) fail(ErrorCode::NotDisjoint, "curves share the vertex " + to_string(v));
  const std::array<Curve, 2> both{g0, g1};
  const auto p = SlantProjection::standard(basis, curve_length(both, basis.b3));
  const long long sum = slanted_pretwist(p, g0.segments, g1.segments) + slanted_pretwist(p, g1.segments, g0.segments);
  if (sum % 2 != 0) fail(ErrorCode::InvariantViolation, "odd crossing count between closed curves");
  return sum / 2;
}

long long directional_writhe(const Curve& g, const Basis& basis, Rational a, Rational b) {
  const std::array<Curve, 1> one{g};
  const auto p = SlantProjection::make(basis, a, b, curve_length(one, basis.b3));
  return slanted_pretwist(p, g.segments, g.segments);
}

std::pair<long long, long long> wr_pm(const Curve& g, const Basis& basis) {
  const std::size_t n = g.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!g.segments[k].dir().parallel(basis.b3) && !g.segments[(k + 1) % n].dir().parallel(basis.b3))
      fail(ErrorCode::InvalidArgument, "wr_pm needs a curve whose every other segment is parallel to b3");
  }
  const std::array<Curve, 1> one{g};
  const int len = curve_length(one, basis.b3);
  const Rational e(1, len + 1);
  return {directional_writhe(g, basis, e, e), directional_writhe(g, basis, e, -e)};
}

int eta(const Basis& basis, const Curve& g, std::size_t k) {
  const Dir a = g.segments[k % g.size()].dir(), b = g.segments[(k + 1) % g.size()].dir();
  if ((a == basis.b2 && b == basis.b3) || (a == -basis.b3 && b == -basis.b2)) return 1;
  if ((a == -basis.b2 && b == -basis.b3) || (a == basis.b3 && b == basis.b2)) return -1;
  return 0;
}

long long twist_via_writhe(const Tiling& t, int axis) {
  const Classification cls = classify(t.region());
  const CylinderAxis* ax = cls.find(axis);
  if (!ax) fail(ErrorCode::UnsupportedRegion, std::string("region is not a pseudocylinder along ") + axis_name(axis));
  if (ax->depth % 2 != 0) fail(ErrorCode::UnsupportedRegion, "twist_via_writhe needs even depth");
  const Basis basis = Basis::with_third(Dir(axis, 1));
  const auto curves = nontrivial(gamma(t, base_tiling(t.region_ptr(), axis)));
  long long twice = 0;
  for (const Curve& g : curves) {
    const auto [plus, minus] = wr_pm(g, basis);
    if ((plus + minus) % 2 != 0) fail(ErrorCode::InvariantViolation, "Wr+ + Wr- is odd");
    twice += plus + minus;
  }
  long long links = 0;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) links += linking_number(curves[i], curves[j], basis);
  return twice / 2 + 2 * links;
}

long long twist_via_writhe(const Tiling& t) {
  const Classification cls = classify(t.region());
  for (const CylinderAxis& ax : cls.axes)
    if (ax.depth % 2 == 0) return twist_via_writhe(t, ax.axis);
  fail(ErrorCode::UnsupportedRegion, "region is not a pseudocylinder of even depth");
}

nlohmann::json crossings_json(const SlantProjection& p, std::span<const Segment> a, std::span<const Segment> b) {
  auto seg = [](const Segment& s) {
    return nlohmann::json{{s.start2.x, s.start2.y, s.start2.z}, {s.end2.x, s.end2.y, s.end2.z}};
  };
  auto rat = [](const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); };
  nlohmann::json out = nlohmann::json::array();
  for (const Segment& l0 : a) {
    for (const Segment& l1 : b) {
      const auto c = crossing(p, l0, l1);
      if (!c) continue;
      out.push_back({{"seg0", seg(l0)}, {"seg1", seg(l1)}, {"s0", rat(c->s0)}, {"s1", rat(c->s1)}, {"sign", c->sign}, {"scale", 2}});
    }
  }
  return out;
}

}  // namespace dtwist
