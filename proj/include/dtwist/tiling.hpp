#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dtwist/geometry.hpp"

namespace dtwist {

// Two face-adjacent cubes, stored as (white, black).
struct Domino {
  Cube white;
  Cube black;

  // Orients an adjacent pair; throws if the cubes are not face-adjacent.
  static Domino from_cubes(Cube a, Cube b);

  // v(d): center(black) - center(white).
  Dir v() const { return *Dir::from_vec(black.corner - white.corner); }
  int axis() const { return v().axis(); }
  Cube low() const { return std::min(white, black); }
  bool parallel(const Domino& o) const { return axis() == o.axis(); }
  bool contains(const Cube& c) const { return c == white || c == black; }

  friend constexpr auto operator<=>(const Domino&, const Domino&) = default;
};

std::string to_string(const Domino& d);

// Oriented unit segment between two cube centers, in doubled coordinates
// (so every endpoint has odd integer coordinates).
struct Segment {
  Vec3 start2;
  Vec3 end2;

  Vec3 v() const { return Vec3{(end2.x - start2.x) / 2, (end2.y - start2.y) / 2, (end2.z - start2.z) / 2}; }
  Dir dir() const { return *Dir::from_vec(v()); }
  Segment reversed() const { return {end2, start2}; }
  // A dimer starts at the center of a white cube.
  bool is_dimer() const;

  static Segment of(const Domino& d) { return {d.white.center2(), d.black.center2()}; }

  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
};

// Perfect cover of a region by dominoes. Internally each cube records the
// direction of its partner, indexed by the region's cube order, which makes
// equality, hashing and local moves cheap. Immutable.
class Tiling {
 public:
  Tiling() = default;

  const Region& region() const { return *region_; }
  const std::shared_ptr<const Region>& region_ptr() const { return region_; }
  std::size_t size() const { return region_ ? region_->size() / 2 : 0; }

  // Direction from cube `index` to its partner.
  Dir partner_dir(int index) const { return Dir::from_index(dirs_[static_cast<std::size_t>(index)]); }
  int partner(int index) const { return region_->neighbor(index, partner_dir(index)); }
  Domino domino_at(int index) const;
  bool has(const Domino& d) const;

  // Dominoes sorted by white cube.
  std::vector<Domino> dominoes() const;
  const std::vector<std::uint8_t>& codes() const { return dirs_; }

  Tiling with_codes(std::vector<std::uint8_t> codes) const;

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.dirs_ == b.dirs_ && (a.region_ == b.region_ || *a.region_ == *b.region_);
  }

 private:
  friend Tiling make_tiling_unchecked(std::shared_ptr<const Region>, std::vector<std::uint8_t>);
  friend Tiling validate(std::shared_ptr<const Region>, std::span<const Domino>);

  std::shared_ptr<const Region> region_;
  std::vector<std::uint8_t> dirs_;
};

// Trusted constructor for the enumeration paths: codes must describe a
// perfect matching of the region.
Tiling make_tiling_unchecked(std::shared_ptr<const Region> region, std::vector<std::uint8_t> codes);

// Checks that the dominoes partition the region exactly. Reports the first
// offending cube (overlap, gap, domino outside the region, swapped colors).
Tiling validate(std::shared_ptr<const Region> region, std::span<const Domino> dominoes);
Tiling validate(const Region& region, std::span<const Domino> dominoes);
// Region taken to be the union of the dominoes.
Tiling tiling_from_dominoes(std::span<const Domino> dominoes);

// Every domino parallel to `axis`. Region must be a pseudocylinder along the
// axis with even depth.
Tiling base_tiling(const Region& region, int axis);
Tiling base_tiling(std::shared_ptr<const Region> region, int axis);

std::vector<Segment> to_dimers(const Tiling& t);
Tiling from_dimers(std::shared_ptr<const Region> region, std::span<const Segment> dimers);

// Disjoint union of two tilings of interior-disjoint regions.
Tiling disjoint_union(const Tiling& a, const Tiling& b);
Tiling translated(const Tiling& t, Vec3 offset);
Tiling reflected(const Tiling& t, int axis);
// Rotation by a quarter turn about `axis` (maps e_a1 -> e_a2 for the cyclic
// in-plane pair), applied `turns` times.
Tiling rotated(const Tiling& t, int axis, int turns);

// 64-bit hash of the canonical representation.
std::uint64_t hash_codes(std::span<const std::uint8_t> codes);

}  // namespace dtwist
