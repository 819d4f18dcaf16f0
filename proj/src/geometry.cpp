#include "dtwist/geometry.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace dtwist {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::UnsupportedRegion: return "unsupported-region";
    case ErrorCode::InvariantViolation: return "internal-invariant-violation";
    case ErrorCode::NotEmbeddable: return "not-embeddable";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::NotDisjoint: return "not-disjoint";
    case ErrorCode::InvalidMove: return "invalid-move";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

std::string to_string(Vec3 v) {
  std::ostringstream os;
  os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
  return os.str();
}

std::optional<Dir> Dir::from_vec(Vec3 v) {
  for (Dir d : kAllDirs) {
    if (d.vec() == v) return d;
  }
  return std::nullopt;
}

char axis_name(int axis) { return static_cast<char>('x' + axis); }

std::optional<int> parse_axis(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  return std::nullopt;
}

std::string to_string(Dir d) {
  return std::string(1, d.sign() > 0 ? '+' : '-') + axis_name(d.axis());
}

bool Basis::valid(Dir b1, Dir b2, Dir b3) { return det(b1.vec(), b2.vec(), b3.vec()) == 1; }

const std::array<Basis, 24>& Basis::all() {
  static const std::array<Basis, 24> bases = [] {
    std::array<Basis, 24> out{};
    std::size_t n = 0;
    for (Dir a : kAllDirs)
      for (Dir b : kAllDirs)
        for (Dir c : kAllDirs)
          if (valid(a, b, c)) out[n++] = Basis{a, b, c};
    return out;
  }();
  return bases;
}

Basis Basis::with_third(Dir u) {
  // Cyclic completion: (e_y, e_z, e_x), (e_z, e_x, e_y), (e_x, e_y, e_z);
  // negating the third vector is compensated by swapping the first two.
  const int a = u.axis();
  Dir b1((a + 1) % 3, 1);
  Dir b2((a + 2) % 3, 1);
  if (u.sign() < 0) std::swap(b1, b2);
  return Basis{b1, b2, u};
}

// ---------------------------------------------------------------- Region

Region::Region(std::vector<Cube> cubes, Lookup lookup) : cubes_(std::move(cubes)) {
  std::sort(cubes_.begin(), cubes_.end());
  cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
  build_index(lookup);
}

Region Region::from_unique(std::vector<Cube> cubes) {
  std::vector<Cube> sorted = cubes;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail(ErrorCode::InvalidArgument, "duplicate cube " + to_string(dup->corner));
  return Region(std::move(sorted));
}

void Region::build_index(Lookup lookup) {
  black_ = 0;
  dense_.clear();
  hashed_.clear();
  if (cubes_.empty()) {
    bounds_ = {};
    neighbors_.clear();
    return;
  }
  Vec3 lo = cubes_.front().corner, hi = lo;
  for (const Cube& c : cubes_) {
    for (int a = 0; a < 3; ++a) {
      lo.at(a) = std::min(lo[a], c.corner[a]);
      hi.at(a) = std::max(hi[a], c.corner[a]);
    }
    if (c.black()) ++black_;
  }
  bounds_ = {lo, hi + Vec3{1, 1, 1}};
  const Vec3 ext = bounds_.extent();
  const bool dense = lookup == Lookup::Automatic && ext.x <= 64 && ext.y <= 64 && ext.z <= 64;
  if (dense) {
    dense_.assign(static_cast<std::size_t>(bounds_.volume()), kNoCube);
    for (std::size_t i = 0; i < cubes_.size(); ++i) {
      const Vec3 r = cubes_[i].corner - lo;
      dense_[static_cast<std::size_t>((r.x * ext.y + r.y) * ext.z + r.z)] = static_cast<int>(i);
    }
  } else {
    hashed_.reserve(cubes_.size() * 2);
    for (std::size_t i = 0; i < cubes_.size(); ++i) hashed_.emplace(cubes_[i], static_cast<int>(i));
  }
  neighbors_.assign(cubes_.size() * 6, kNoCube);
  for (std::size_t i = 0; i < cubes_.size(); ++i)
    for (Dir d : kAllDirs) neighbors_[i * 6 + static_cast<std::size_t>(d.index())] = index_of(cubes_[i].neighbor(d));
}

int Region::index_of(const Cube& c) const {
  if (cubes_.empty()) return kNoCube;
  if (!dense_.empty()) {
    const Vec3 r = c.corner - bounds_.lo;
    const Vec3 ext = bounds_.extent();
    if (r.x < 0 || r.y < 0 || r.z < 0 || r.x >= ext.x || r.y >= ext.y || r.z >= ext.z) return kNoCube;
    return dense_[static_cast<std::size_t>((r.x * ext.y + r.y) * ext.z + r.z)];
  }
  auto it = hashed_.find(c);
  return it == hashed_.end() ? kNoCube : it->second;
}

Region Region::translated(Vec3 offset) const {
  std::vector<Cube> out;
  out.reserve(cubes_.size());
  for (const Cube& c : cubes_) out.push_back(c + offset);
  return Region(std::move(out));
}

Region Region::reflected(int axis) const {
  std::vector<Cube> out;
  out.reserve(cubes_.size());
  for (Cube c : cubes_) {
    c.corner.at(axis) = -c.corner[axis] - 1;
    out.push_back(c);
  }
  return Region(std::move(out));
}

Region Region::united(const Region& other) const {
  std::vector<Cube> out = cubes_;
  out.insert(out.end(), other.cubes_.begin(), other.cubes_.end());
  return Region(std::move(out));
}

Region Region::minus(const Region& other) const {
  std::vector<Cube> out;
  for (const Cube& c : cubes_)
    if (!other.contains(c)) out.push_back(c);
  return Region(std::move(out));
}

// ---------------------------------------------------------- PlanarRegion

PlanarRegion PlanarRegion::make(int axis, int level, std::vector<std::pair<int, int>> squares) {
  if (axis < 0 || axis > 2) fail(ErrorCode::InvalidArgument, "plane axis must be 0, 1 or 2");
  std::sort(squares.begin(), squares.end());
  if (std::adjacent_find(squares.begin(), squares.end()) != squares.end())
    fail(ErrorCode::InvalidArgument, "duplicate square in planar region");
  return PlanarRegion{axis, level, std::move(squares)};
}

std::pair<int, int> PlanarRegion::plane_axes() const {
  if (axis == 0) return {1, 2};
  if (axis == 1) return {0, 2};
  return {0, 1};
}

Cube PlanarRegion::cube_at(std::pair<int, int> sq, int k) const {
  const auto [a1, a2] = plane_axes();
  Vec3 c;
  c.at(a1) = sq.first;
  c.at(a2) = sq.second;
  c.at(axis) = level + k;
  return Cube{c};
}

bool PlanarRegion::contains(std::pair<int, int> sq) const {
  return std::binary_search(squares.begin(), squares.end(), sq);
}

namespace {

using Square = std::pair<int, int>;
constexpr std::array<Square, 4> kSteps{Square{1, 0}, Square{-1, 0}, Square{0, 1}, Square{0, -1}};

}  // namespace

bool is_connected(std::span<const Square> squares) {
  if (squares.empty()) return false;
  std::set<Square> all(squares.begin(), squares.end());
  std::set<Square> seen{*all.begin()};
  std::queue<Square> q;
  q.push(*all.begin());
  while (!q.empty()) {
    auto [u, v] = q.front();
    q.pop();
    for (auto [du, dv] : kSteps) {
      Square n{u + du, v + dv};
      if (all.count(n) && seen.insert(n).second) q.push(n);
    }
  }
  return seen.size() == all.size();
}

bool is_simply_connected(std::span<const Square> squares) {
  if (!is_connected(squares)) return false;
  int u0 = squares[0].first, u1 = u0, v0 = squares[0].second, v1 = v0;
  for (auto [u, v] : squares) {
    u0 = std::min(u0, u);
    u1 = std::max(u1, u);
    v0 = std::min(v0, v);
    v1 = std::max(v1, v);
  }
  --u0, --v0, ++u1, ++v1;
  std::set<Square> base(squares.begin(), squares.end());
  std::vector<Square> complement;
  for (int u = u0; u <= u1; ++u)
    for (int v = v0; v <= v1; ++v)
      if (!base.count({u, v})) complement.push_back({u, v});
  return is_connected(complement);
}

Region make_box(Vec3 lo, Vec3 hi) {
  if (hi.x <= lo.x || hi.y <= lo.y || hi.z <= lo.z)
    fail(ErrorCode::InvalidArgument, "box dimensions must be positive");
  std::vector<Cube> cubes;
  cubes.reserve(static_cast<std::size_t>(hi.x - lo.x) * static_cast<std::size_t>(hi.y - lo.y) *
                static_cast<std::size_t>(hi.z - lo.z));
  for (int x = lo.x; x < hi.x; ++x)
    for (int y = lo.y; y < hi.y; ++y)
      for (int z = lo.z; z < hi.z; ++z) cubes.push_back(Cube{{x, y, z}});
  return Region(std::move(cubes));
}

Region make_box(int L, int M, int N) {
  if (L < 1 || M < 1 || N < 1) fail(ErrorCode::InvalidArgument, "box dimensions must be positive");
  return make_box(Vec3{0, 0, 0}, Vec3{L, M, N});
}

Region make_cylinder(const PlanarRegion& base, Dir axis, int depth) {
  if (axis.axis() != base.axis) fail(ErrorCode::InvalidArgument, "cylinder axis must be normal to the base plane");
  if (depth < 1) fail(ErrorCode::InvalidArgument, "cylinder depth must be positive");
  std::vector<Cube> cubes;
  cubes.reserve(base.squares.size() * static_cast<std::size_t>(depth));
  for (const auto& sq : base.squares)
    for (int k = 0; k < depth; ++k) cubes.push_back(base.cube_at(sq, axis.sign() > 0 ? k : -1 - k));
  return Region(std::move(cubes));
}

// ------------------------------------------------------------ classify

std::vector<int> Classification::cylinder_axes() const {
  std::vector<int> out;
  for (const auto& a : axes)
    if (a.simply_connected) out.push_back(a.axis);
  return out;
}

std::vector<int> Classification::pseudocylinder_axes() const {
  std::vector<int> out;
  for (const auto& a : axes) out.push_back(a.axis);
  return out;
}

const CylinderAxis* Classification::find(int axis) const {
  for (const auto& a : axes)
    if (a.axis == axis) return &a;
  return nullptr;
}

std::string to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Box: return "box";
    case Classification::Kind::Cylinder: return "cylinder";
    case Classification::Kind::Pseudocylinder: return "pseudocylinder";
    case Classification::Kind::Other: return "other";
  }
  return "other";
}

Classification classify(const Region& region) {
  Classification out;
  if (region.empty()) return out;
  const BoundingBox& bb = region.bounds();
  for (int axis = 0; axis < 3; ++axis) {
    PlanarRegion base;
    base.axis = axis;
    base.level = bb.lo[axis];
    const auto [a1, a2] = base.plane_axes();
    std::set<Square> proj;
    for (const Cube& c : region.cubes()) proj.insert({c.corner[a1], c.corner[a2]});
    const int depth = bb.extent()[axis];
    if (proj.size() * static_cast<std::size_t>(depth) != region.size()) continue;
    base.squares.assign(proj.begin(), proj.end());
    if (!is_connected(base.squares)) continue;
    out.axes.push_back(CylinderAxis{axis, base, depth, is_simply_connected(base.squares)});
  }
  if (static_cast<long long>(region.size()) == bb.volume()) {
    out.kind = Classification::Kind::Box;
  } else if (!out.cylinder_axes().empty()) {
    out.kind = Classification::Kind::Cylinder;
  } else if (!out.axes.empty()) {
    out.kind = Classification::Kind::Pseudocylinder;
  }
  return out;
}

// ------------------------------------------------------- full balance

bool is_fully_balanced(const Region& region, Dir u) {
  if (region.empty()) return true;
  const int w = u.axis();
  const int a1 = (w + 1) % 3, a2 = (w + 2) % 3;
  const BoundingBox& bb = region.bounds();
  // A planar unit square at level k is inside the closed region iff a cube on
  // either side of it belongs to the region.
  auto square_in = [&](int p1, int p2, int k) {
    Vec3 c;
    c.at(a1) = p1;
    c.at(a2) = p2;
    c.at(w) = k;
    if (region.contains(Cube{c})) return true;
    c.at(w) = k - 1;
    return region.contains(Cube{c});
  };
  for (int k = bb.lo[w]; k <= bb.hi[w]; ++k) {
    for (int p1 = bb.lo[a1]; p1 + 1 < bb.hi[a1]; ++p1) {
      for (int p2 = bb.lo[a2]; p2 + 1 < bb.hi[a2]; ++p2) {
        bool inside = true;
        for (int i = 0; i < 2 && inside; ++i)
          for (int j = 0; j < 2 && inside; ++j) inside = square_in(p1 + i, p2 + j, k);
        if (!inside) continue;
        int above = 0, below = 0;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            Vec3 c;
            c.at(a1) = p1 + i;
            c.at(a2) = p2 + j;
            for (int l = bb.lo[w]; l < bb.hi[w]; ++l) {
              c.at(w) = l;
              const Cube cube{c};
              if (!region.contains(cube)) continue;
              (l >= k ? above : below) += cube.color();
            }
          }
        }
        if (above != 0 || below != 0) return false;
      }
    }
  }
  return true;
}

bool is_fully_balanced(const Region& region) {
  for (Dir u : kAxisDirs)
    if (!is_fully_balanced(region, u)) return false;
  return true;
}

}  // namespace dtwist
