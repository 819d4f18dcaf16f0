#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtwist/error.hpp"

namespace dtwist {

// Point of the integer lattice Z^3.
struct Vec3 {
  int x = 0;
  int y = 0;
  int z = 0;

  constexpr int operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  constexpr int& at(int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(int k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
  friend constexpr auto operator<=>(const Vec3&, const Vec3&) = default;
};

constexpr int dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// det of the matrix whose rows are a, b, c.
constexpr int det(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

std::string to_string(Vec3 v);

// One of the six unit vectors +-e_x, +-e_y, +-e_z. Encoded as
// index = 2*axis + (negative ? 1 : 0).
class Dir {
 public:
  constexpr Dir() = default;
  constexpr Dir(int axis, int sign) : index_(static_cast<std::uint8_t>(2 * axis + (sign < 0 ? 1 : 0))) {}

  static constexpr Dir from_index(int index) { return Dir(index / 2, index % 2 ? -1 : 1); }
  static std::optional<Dir> from_vec(Vec3 v);

  constexpr int index() const { return index_; }
  constexpr int axis() const { return index_ / 2; }
  constexpr int sign() const { return index_ % 2 ? -1 : 1; }
  constexpr Vec3 vec() const {
    Vec3 v;
    v.at(axis()) = sign();
    return v;
  }
  constexpr Dir operator-() const { return Dir(axis(), -sign()); }
  constexpr bool parallel(Dir o) const { return axis() == o.axis(); }

  friend constexpr auto operator<=>(const Dir&, const Dir&) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr Dir kPosX{0, 1};
inline constexpr Dir kNegX{0, -1};
inline constexpr Dir kPosY{1, 1};
inline constexpr Dir kNegY{1, -1};
inline constexpr Dir kPosZ{2, 1};
inline constexpr Dir kNegZ{2, -1};
inline constexpr std::array<Dir, 6> kAllDirs{kPosX, kNegX, kPosY, kNegY, kPosZ, kNegZ};
inline constexpr std::array<Dir, 3> kAxisDirs{kPosX, kPosY, kPosZ};

std::string to_string(Dir d);          // "+x", "-z", ...
char axis_name(int axis);               // 'x', 'y', 'z'
std::optional<int> parse_axis(std::string_view name);

// Positively oriented basis with vectors in {+-e_x, +-e_y, +-e_z}.
struct Basis {
  Dir b1;
  Dir b2;
  Dir b3;

  friend constexpr bool operator==(const Basis&, const Basis&) = default;

  // The 24 positively oriented bases, in a fixed order.
  static const std::array<Basis, 24>& all();
  // A fixed positively oriented basis whose third vector is `u`.
  static Basis with_third(Dir u);
  static bool valid(Dir b1, Dir b2, Dir b3);
};

// Unit cube corner + [0,1]^3.
struct Cube {
  Vec3 corner;

  // ccol: +1 for black (x+y+z odd), -1 for white.
  constexpr int color() const { return ((corner.x + corner.y + corner.z) & 1) ? 1 : -1; }
  constexpr bool black() const { return color() == 1; }
  constexpr bool white() const { return color() == -1; }
  // Doubled center, i.e. 2*corner + (1,1,1).
  constexpr Vec3 center2() const { return {2 * corner.x + 1, 2 * corner.y + 1, 2 * corner.z + 1}; }
  constexpr Cube operator+(Vec3 v) const { return {corner + v}; }
  constexpr Cube neighbor(Dir d) const { return {corner + d.vec()}; }

  friend constexpr auto operator<=>(const Cube&, const Cube&) = default;
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(c.corner.x);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.corner.y);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.corner.z);
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

struct BoundingBox {
  Vec3 lo;  // inclusive minimal corner
  Vec3 hi;  // exclusive: cubes satisfy lo <= corner < hi componentwise
  Vec3 extent() const { return hi - lo; }
  long long volume() const { return 1LL * extent().x * extent().y * extent().z; }
};

// Finite set of unit cubes. Cubes are stored sorted (lexicographic on the
// corner) and indexed 0..size()-1 in that order. Lookup goes through a dense
// grid when the bounding box fits in 64^3 and through a hash map otherwise.
class Region {
 public:
  enum class Lookup { Automatic, Hash };
  static constexpr int kNoCube = -1;

  Region() = default;
  explicit Region(std::vector<Cube> cubes, Lookup lookup = Lookup::Automatic);

  // Like the constructor but rejects duplicates instead of merging them.
  static Region from_unique(std::vector<Cube> cubes);

  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  const std::vector<Cube>& cubes() const { return cubes_; }
  const Cube& cube(int index) const { return cubes_[static_cast<std::size_t>(index)]; }

  bool contains(const Cube& c) const { return index_of(c) != kNoCube; }
  int index_of(const Cube& c) const;
  // Index of the face neighbour of cube `index` in direction d, or kNoCube.
  int neighbor(int index, Dir d) const { return neighbors_[static_cast<std::size_t>(index) * 6 + static_cast<std::size_t>(d.index())]; }

  const BoundingBox& bounds() const { return bounds_; }
  int black_count() const { return black_; }
  int white_count() const { return static_cast<int>(cubes_.size()) - black_; }
  bool uses_dense_lookup() const { return !dense_.empty(); }

  // Extent along axis: max - min over all points of the region.
  int length(int axis) const { return empty() ? 0 : bounds_.extent()[axis]; }

  Region translated(Vec3 offset) const;
  // Reflection p -> p - 2 (p.w) w through the coordinate plane normal to `axis`.
  Region reflected(int axis) const;
  Region united(const Region& other) const;
  Region minus(const Region& other) const;

  friend bool operator==(const Region& a, const Region& b) { return a.cubes_ == b.cubes_; }

 private:
  void build_index(Lookup lookup);

  std::vector<Cube> cubes_;
  BoundingBox bounds_{};
  int black_ = 0;
  std::vector<int> dense_;
  std::unordered_map<Cube, int, CubeHash> hashed_;
  std::vector<int> neighbors_;
};

// Planar region: unit squares in the plane {p : p[axis] = level}. A square is
// addressed by its minimal corner's two in-plane coordinates (u, v), taken in
// increasing axis order (for axis z: (x, y); for x: (y, z); for y: (x, z)).
struct PlanarRegion {
  int axis = 2;
  int level = 0;
  std::vector<std::pair<int, int>> squares;

  // Normalizes: sorts squares, rejects duplicates.
  static PlanarRegion make(int axis, int level, std::vector<std::pair<int, int>> squares);

  // In-plane axes (first, second) for this plane.
  std::pair<int, int> plane_axes() const;
  // Cube occupying square `sq` in the slab [level + k, level + k + 1] along axis.
  Cube cube_at(std::pair<int, int> sq, int k) const;
  // Color of the square: the color of the cube just on the +axis side.
  int color(std::pair<int, int> sq) const { return cube_at(sq, 0).color(); }
  bool contains(std::pair<int, int> sq) const;
};

// Squares edge-connected.
bool is_connected(std::span<const std::pair<int, int>> squares);
// Connected and the complement inside the one-ring padded bounding
// rectangle is connected.
bool is_simply_connected(std::span<const std::pair<int, int>> squares);

Region make_box(int L, int M, int N);
Region make_box(Vec3 lo, Vec3 hi);
// base + [0, depth] * axis. axis must be normal to the base plane.
Region make_cylinder(const PlanarRegion& base, Dir axis, int depth);

struct CylinderAxis {
  int axis = 2;
  PlanarRegion base;  // at the level of the region's minimal coordinate
  int depth = 0;
  bool simply_connected = false;
};

struct Classification {
  enum class Kind { Box, Cylinder, Pseudocylinder, Other };
  Kind kind = Kind::Other;
  // Every axis along which the region is a pseudocylinder (cylinders included).
  std::vector<CylinderAxis> axes;

  bool is_cylinder() const { return kind == Kind::Box || kind == Kind::Cylinder; }
  bool is_pseudocylinder() const { return kind != Kind::Other; }
  std::vector<int> cylinder_axes() const;
  std::vector<int> pseudocylinder_axes() const;
  const CylinderAxis* find(int axis) const;
};

std::string to_string(Classification::Kind kind);

Classification classify(const Region& region);

bool is_fully_balanced(const Region& region, Dir u);
bool is_fully_balanced(const Region& region);

}  // namespace dtwist
