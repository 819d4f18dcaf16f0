#include "dtwist/tiling.hpp"

#include <algorithm>

namespace dtwist {

Domino Domino::from_cubes(Cube a, Cube b) {
  const Vec3 d = b.corner - a.corner;
  if (!Dir::from_vec(d)) fail(ErrorCode::InvalidArgument, "cubes " + to_string(a.corner) + " and " + to_string(b.corner) + " are not face-adjacent");
  return a.white() ? Domino{a, b} : Domino{b, a};
}

std::string to_string(const Domino& d) {
  return "[" + to_string(d.white.corner) + "->" + to_string(d.black.corner) + "]";
}

bool Segment::is_dimer() const {
  const int corner_sum = ((start2.x - 1) >> 1) + ((start2.y - 1) >> 1) + ((start2.z - 1) >> 1);
  return (corner_sum & 1) == 0;
}

Domino Tiling::domino_at(int index) const {
  return Domino::from_cubes(region_->cube(index), region_->cube(partner(index)));
}

bool Tiling::has(const Domino& d) const {
  const int i = region_->index_of(d.white);
  if (i == Region::kNoCube) return false;
  return partner_dir(i) == d.v();
}

std::vector<Domino> Tiling::dominoes() const {
  std::vector<Domino> out;
  out.reserve(size());
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const Cube& c = region_->cube(static_cast<int>(i));
    if (c.white()) out.push_back(Domino{c, c.neighbor(partner_dir(static_cast<int>(i)))});
  }
  return out;
}

Tiling Tiling::with_codes(std::vector<std::uint8_t> codes) const { return make_tiling_unchecked(region_, std::move(codes)); }

Tiling make_tiling_unchecked(std::shared_ptr<const Region> region, std::vector<std::uint8_t> codes) {
  Tiling t;
  t.region_ = std::move(region);
  t.dirs_ = std::move(codes);
  return t;
}

Tiling validate(std::shared_ptr<const Region> region, std::span<const Domino> dominoes) {
  constexpr std::uint8_t kUnset = 0xFF;
  std::vector<std::uint8_t> codes(region->size(), kUnset);
  for (const Domino& d : dominoes) {
    const Vec3 step = d.black.corner - d.white.corner;
    const auto dir = Dir::from_vec(step);
    if (!dir) fail(ErrorCode::InvalidArgument, "domino " + to_string(d) + " does not join adjacent cubes");
    if (!d.white.white() || !d.black.black())
      fail(ErrorCode::InvalidArgument, "domino " + to_string(d) + " has white/black roles swapped");
    const int wi = region->index_of(d.white);
    const int bi = region->index_of(d.black);
    if (wi == Region::kNoCube) fail(ErrorCode::InvalidArgument, "domino outside region at cube " + to_string(d.white.corner));
    if (bi == Region::kNoCube) fail(ErrorCode::InvalidArgument, "domino outside region at cube " + to_string(d.black.corner));
    if (codes[static_cast<std::size_t>(wi)] != kUnset) fail(ErrorCode::InvalidArgument, "overlap at cube " + to_string(d.white.corner));
    if (codes[static_cast<std::size_t>(bi)] != kUnset) fail(ErrorCode::InvalidArgument, "overlap at cube " + to_string(d.black.corner));
    codes[static_cast<std::size_t>(wi)] = static_cast<std::uint8_t>(dir->index());
    codes[static_cast<std::size_t>(bi)] = static_cast<std::uint8_t>((-*dir).index());
  }
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (codes[i] == kUnset) fail(ErrorCode::InvalidArgument, "gap at cube " + to_string(region->cube(static_cast<int>(i)).corner));
  return make_tiling_unchecked(std::move(region), std::move(codes));
}

Tiling validate(const Region& region, std::span<const Domino> dominoes) {
  return validate(std::make_shared<const Region>(region), dominoes);
}

Tiling tiling_from_dominoes(std::span<const Domino> dominoes) {
  std::vector<Cube> cubes;
  cubes.reserve(dominoes.size() * 2);
  for (const Domino& d : dominoes) {
    cubes.push_back(d.white);
    cubes.push_back(d.black);
  }
  std::sort(cubes.begin(), cubes.end());
  auto dup = std::adjacent_find(cubes.begin(), cubes.end());
  if (dup != cubes.end()) fail(ErrorCode::InvalidArgument, "overlap at cube " + to_string(dup->corner));
  return validate(std::make_shared<const Region>(Region(std::move(cubes))), dominoes);
}

Tiling base_tiling(std::shared_ptr<const Region> region, int axis) {
  const Classification cls = classify(*region);
  const CylinderAxis* ax = cls.find(axis);
  if (!ax) fail(ErrorCode::InvalidArgument, std::string("region is not a pseudocylinder along ") + axis_name(axis));
  if (ax->depth % 2 != 0) fail(ErrorCode::InvalidArgument, "base tiling needs even depth");
  const int lo = region->bounds().lo[axis];
  std::vector<std::uint8_t> codes(region->size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const int k = region->cube(static_cast<int>(i)).corner[axis] - lo;
    codes[i] = static_cast<std::uint8_t>(Dir(axis, k % 2 == 0 ? 1 : -1).index());
  }
  return make_tiling_unchecked(std::move(region), std::move(codes));
}

Tiling base_tiling(const Region& region, int axis) {
  return base_tiling(std::make_shared<const Region>(region), axis);
}

std::vector<Segment> to_dimers(const Tiling& t) {
  std::vector<Segment> out;
  for (const Domino& d : t.dominoes()) out.push_back(Segment::of(d));
  return out;
}

Tiling from_dimers(std::shared_ptr<const Region> region, std::span<const Segment> dimers) {
  std::vector<Domino> dominoes;
  dominoes.reserve(dimers.size());
  for (const Segment& s : dimers) {
    const Vec3 a = s.start2, b = s.end2;
    const bool odd = (a.x & 1) && (a.y & 1) && (a.z & 1) && (b.x & 1) && (b.y & 1) && (b.z & 1);
    if (!odd || !Dir::from_vec(s.v()) || 2 * s.v() != b - a)
      fail(ErrorCode::InvalidArgument, "segment does not join adjacent cube centers");
    if (!s.is_dimer()) fail(ErrorCode::InvalidArgument, "segment does not start at a white cube");
    const Cube w{{(a.x - 1) / 2, (a.y - 1) / 2, (a.z - 1) / 2}};
    const Cube k{{(b.x - 1) / 2, (b.y - 1) / 2, (b.z - 1) / 2}};
    dominoes.push_back(Domino{w, k});
  }
  return validate(std::move(region), dominoes);
}

Tiling disjoint_union(const Tiling& a, const Tiling& b) {
  std::vector<Domino> all = a.dominoes();
  const auto more = b.dominoes();
  all.insert(all.end(), more.begin(), more.end());
  return validate(std::make_shared<const Region>(a.region().united(b.region())), all);
}

namespace {

template <class CubeMap>
Tiling map_tiling(const Tiling& t, CubeMap&& f) {
  std::vector<Domino> out;
  for (const Domino& d : t.dominoes()) out.push_back(Domino::from_cubes(f(d.white), f(d.black)));
  std::vector<Cube> cubes;
  for (const Cube& c : t.region().cubes()) cubes.push_back(f(c));
  return validate(std::make_shared<const Region>(Region(std::move(cubes))), out);
}

}  // namespace

Tiling translated(const Tiling& t, Vec3 offset) {
  return map_tiling(t, [&](Cube c) { return c + offset; });
}

Tiling reflected(const Tiling& t, int axis) {
  return map_tiling(t, [&](Cube c) {
    c.corner.at(axis) = -c.corner[axis] - 1;
    return c;
  });
}

Tiling rotated(const Tiling& t, int axis, int turns) {
  const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
  turns = ((turns % 4) + 4) % 4;
  return map_tiling(t, [&](Cube c) {
    for (int i = 0; i < turns; ++i) {
      Vec3 n = c.corner;
      n.at(a1) = -c.corner[a2] - 1;
      n.at(a2) = c.corner[a1];
      c.corner = n;
    }
    return c;
  });
}

std::uint64_t hash_codes(std::span<const std::uint8_t> codes) {
  // FNV-1a over the partner directions.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t c : codes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace dtwist
