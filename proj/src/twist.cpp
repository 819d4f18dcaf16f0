#include "dtwist/twist.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "dtwist/construct.hpp"

namespace dtwist {

long long Quarter::to_integer() const {
  if (!is_integer()) fail(ErrorCode::InvariantViolation, "expected an integer, got " + to_string(*this));
  return q_ / 4;
}

std::string to_string(Quarter q) {
  const long long n = q.quarters();
  if (n % 4 == 0) return std::to_string(n / 4);
  const long long g = std::gcd(n < 0 ? -n : n, 4LL);
  return std::to_string(n / g) + "/" + std::to_string(4 / g);
}

namespace {

// Coordinates of a cube orthogonal to u (the column it lies in).
std::pair<int, int> column(const Cube& c, int axis) {
  const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
  return {c.corner[a1], c.corner[a2]};
}

}  // namespace

Quarter tau(Dir u, const Domino& d0, const Domino& d1) {
  const int s = det(d1.v().vec(), d0.v().vec(), u.vec());
  if (s == 0) return {};
  const Vec3 uv = u.vec();
  if (dot(d0.white.corner, uv) >= dot(d1.white.corner, uv)) return {};
  const int a = u.axis();
  for (const Cube& c0 : {d0.white, d0.black})
    for (const Cube& c1 : {d1.white, d1.black})
      if (column(c0, a) == column(c1, a)) return Quarter::quarters(s);
  return {};
}

Quarter tau(Dir u, const Segment& l0, const Segment& l1) {
  const int s = det(l1.v(), l0.v(), u.vec());
  if (s == 0) return {};
  const Vec3 uv = u.vec();
  if (dot(l0.start2, uv) >= dot(l1.start2, uv)) return {};
  for (int a = 0; a < 3; ++a) {
    if (a == u.axis()) continue;
    const int lo0 = std::min(l0.start2[a], l0.end2[a]), hi0 = std::max(l0.start2[a], l0.end2[a]);
    const int lo1 = std::min(l1.start2[a], l1.end2[a]), hi1 = std::max(l1.start2[a], l1.end2[a]);
    if (hi0 < lo1 || hi1 < lo0) return {};
  }
  return Quarter::quarters(s);
}

std::vector<Cube> shade(const Region& region, std::span<const Cube> source, Dir u) {
  const int a = u.axis();
  const Vec3 uv = u.vec();
  std::vector<Cube> out;
  for (const Cube& c : region.cubes()) {
    if (std::find(source.begin(), source.end(), c) != source.end()) continue;
    for (const Cube& s : source) {
      if (column(s, a) == column(c, a) && dot(c.corner, uv) > dot(s.corner, uv)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

Quarter pretwist_pairs(const Tiling& t, Dir u) {
  const auto ds = t.dominoes();
  Quarter sum;
  for (const Domino& d0 : ds)
    for (const Domino& d1 : ds) sum += tau(u, d0, d1);
  return sum;
}

Quarter pretwist(const Tiling& t, Dir u) {
  // Sweep: every pair with a nonzero effect shares exactly one column, so
  // accumulate, per column and in increasing u-level, the sum of v(d) of the
  // dominoes already passed and pair it with the current one.
  const int a = u.axis();
  const Vec3 uv = u.vec();
  struct Entry {
    std::pair<int, int> col;
    int level;
    Vec3 v;
  };
  std::vector<Entry> entries;
  const Region& r = t.region();
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    const Dir d = t.partner_dir(i);
    if (d.axis() == a) continue;
    const Cube& c = r.cube(i);
    const Vec3 v = c.white() ? d.vec() : -d.vec();
    entries.push_back({column(c, a), dot(c.corner, uv), v});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.col, x.level) < std::tie(y.col, y.level);
  });
  long long sum = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    Vec3 below{};
    while (j < entries.size() && entries[j].col == entries[i].col) {
      sum += det(entries[j].v, below, uv);
      below = below + entries[j].v;
      ++j;
    }
    i = j;
  }
  return Quarter::quarters(sum);
}

std::array<Quarter, 3> pretwists(const Tiling& t) {
  return {pretwist(t, kPosX), pretwist(t, kPosY), pretwist(t, kPosZ)};
}

long long twist(const Tiling& t) {
  const Classification cls = classify(t.region());
  if (!cls.is_cylinder()) fail(ErrorCode::UnsupportedRegion, "twist is defined for cylinders; region is " + to_string(cls.kind));
  const auto p = pretwists(t);
  if (p[0] != p[1] || p[1] != p[2])
    fail(ErrorCode::InvariantViolation, "pretwists differ on a cylinder: x:" + to_string(p[0]) + " y:" + to_string(p[1]) + " z:" + to_string(p[2]));
  return p[2].to_integer();
}

Quarter segment_pretwist(Dir u, std::span<const Segment> a0, std::span<const Segment> a1) {
  Quarter sum;
  for (const Segment& l0 : a0)
    for (const Segment& l1 : a1) sum += tau(u, l0, l1);
  return sum;
}

Quarter segment_pretwist(Dir u, std::span<const Segment> a) { return segment_pretwist(u, a, a); }

std::vector<Segment> signed_union(const Tiling& t0, const Tiling& t1) {
  std::vector<Segment> out = to_dimers(t0);
  for (const Segment& s : to_dimers(t1)) out.push_back(s.reversed());
  return out;
}

std::optional<Embedding> find_embedding(const Region& region, const EmbeddingOptions& opts) {
  if (region.empty()) fail(ErrorCode::InvalidArgument, "cannot embed an empty region");
  const BoundingBox bb = region.bounds();
  // Uniform growth keeps every side's parity, so each layer count is also
  // tried with one extra layer on the high face of any subset of axes.
  static constexpr std::array<int, 8> kExtra{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  for (int g = 0; g <= opts.max_growth; ++g) {
    for (int mask : kExtra) {
      const Vec3 grow{g, g, g};
      const Vec3 extra{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
      Region box = make_box(bb.lo - grow, bb.hi + grow + extra);
      const Region rest = box.minus(region);
      if (rest.black_count() != rest.white_count()) continue;
      try {
        auto comp = find_tiling(rest, opts.node_limit);
        if (comp) return Embedding{std::move(box), std::move(*comp)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ResourceLimit) throw;
      }
    }
  }
  return std::nullopt;
}

long long relative_twist(const Region& region, const Tiling& t0, const Tiling& t1, const EmbeddingOptions& opts) {
  if (!(t0.region() == region) || !(t1.region() == region)) fail(ErrorCode::InvalidArgument, "both tilings must tile the region");
  const auto emb = find_embedding(region, opts);
  if (!emb) fail(ErrorCode::NotEmbeddable, "no box with a tileable complement within the growth budget");
  return relative_twist(t0, t1, emb->complement);
}

long long relative_twist(const Tiling& t0, const Tiling& t1, const Tiling& complement) {
  if (!(t0.region() == t1.region())) fail(ErrorCode::InvalidArgument, "tilings must share a region");
  if (complement.size() == 0) return twist(t0) - twist(t1);
  return twist(disjoint_union(t0, complement)) - twist(disjoint_union(t1, complement));
}

}  // namespace dtwist
