#include "dtwist/moves.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dtwist {

namespace {

constexpr std::array<std::pair<int, int>, 6> kFlipVariants{
    std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 0}, std::pair{1, 2}, std::pair{2, 0}, std::pair{2, 1}};

int third_axis(int a, int b) { return 3 - a - b; }

using Edge = std::pair<Vec3, Vec3>;
using Config = std::set<Edge>;

Edge make_edge(Vec3 a, Vec3 b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// All 24 rotations of the window [0,2]^3 as maps on cube offsets {0,1}^3.
std::vector<std::array<std::array<int, 3>, 3>> window_rotations() {
  std::vector<std::array<std::array<int, 3>, 3>> out;
  for (const Basis& b : Basis::all()) {
    std::array<std::array<int, 3>, 3> m{};
    const std::array<Vec3, 3> cols{b.b1.vec(), b.b2.vec(), b.b3.vec()};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][r];
    out.push_back(m);
  }
  return out;
}

Vec3 rotate_offset(const std::array<std::array<int, 3>, 3>& m, Vec3 o) {
  const Vec3 p{2 * o.x - 1, 2 * o.y - 1, 2 * o.z - 1};
  Vec3 q;
  for (int r = 0; r < 3; ++r) q.at(r) = m[static_cast<std::size_t>(r)][0] * p.x + m[static_cast<std::size_t>(r)][1] * p.y + m[static_cast<std::size_t>(r)][2] * p.z;
  return Vec3{(q.x + 1) / 2, (q.y + 1) / 2, (q.z + 1) / 2};
}

Config config_of(int diagonal, int matching) {
  const auto& c = trit_cycle(diagonal);
  Config out;
  for (int e = 0; e < 3; ++e) {
    const std::size_t a = static_cast<std::size_t>((matching + 2 * e) % 6), b = static_cast<std::size_t>((matching + 2 * e + 1) % 6);
    out.insert(make_edge(c[a], c[b]));
  }
  return out;
}

// Positive reference configuration: hole pair {(0,0,0),(1,1,1)}, with the
// dominoes (1,1,0)-(0,1,0), (0,1,1)-(0,0,1), (1,0,1)-(1,0,0). A positive
// trit applied in a fully balanced region raises every pretwist by one.
Config positive_reference() {
  Config c;
  c.insert(make_edge({1, 1, 0}, {0, 1, 0}));
  c.insert(make_edge({0, 1, 1}, {0, 0, 1}));
  c.insert(make_edge({1, 0, 1}, {1, 0, 0}));
  return c;
}

// sign[diagonal][matching]
const std::array<std::array<int, 2>, 4>& sign_table() {
  static const std::array<std::array<int, 2>, 4> table = [] {
    std::set<Config> positive;
    const Config ref = positive_reference();
    for (const auto& m : window_rotations()) {
      Config r;
      for (const Edge& e : ref) r.insert(make_edge(rotate_offset(m, e.first), rotate_offset(m, e.second)));
      positive.insert(r);
    }
    std::array<std::array<int, 2>, 4> t{};
    int npos = 0;
    for (int d = 0; d < 4; ++d) {
      for (int m = 0; m < 2; ++m) {
        const bool pos = positive.count(config_of(d, m)) > 0;
        t[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)] = pos ? 1 : -1;
        npos += pos;
      }
    }
    if (positive.size() != 4 || npos != 4) fail(ErrorCode::InvariantViolation, "trit reference orbit is not chiral");
    return t;
  }();
  return table;
}

Domino domino_between(Vec3 anchor, Vec3 a, Vec3 b) {
  return Domino::from_cubes(Cube{anchor + a}, Cube{anchor + b});
}

}  // namespace

int Flip::variant() const {
  for (int k = 0; k < 6; ++k)
    if (kFlipVariants[static_cast<std::size_t>(k)] == std::pair{normal, along}) return k;
  return -1;
}

std::vector<Flip> flips(const Tiling& t) {
  const Region& r = t.region();
  std::vector<Flip> out;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    const Dir d = t.partner_dir(i);
    if (d.sign() < 0) continue;  // visit each domino from its low cube
    const int p = d.axis();
    for (int q = 0; q < 3; ++q) {
      if (q == p) continue;
      const int j = r.neighbor(i, Dir(q, 1));
      if (j == Region::kNoCube || t.partner_dir(j) != d) continue;
      Flip f;
      f.anchor = r.cube(i).corner;
      f.normal = third_axis(p, q);
      f.along = p;
      f.removed = {t.domino_at(i), t.domino_at(j)};
      f.placed = {Domino::from_cubes(r.cube(i), r.cube(j)),
                  Domino::from_cubes(r.cube(t.partner(i)), r.cube(t.partner(j)))};
      std::sort(f.placed.begin(), f.placed.end());
      std::sort(f.removed.begin(), f.removed.end());
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), [](const Flip& a, const Flip& b) {
    return std::tuple(a.anchor, a.variant()) < std::tuple(b.anchor, b.variant());
  });
  return out;
}

namespace {

Tiling replace_dominoes(const Tiling& t, std::span<const Domino> removed, std::span<const Domino> placed) {
  for (const Domino& d : removed)
    if (!t.has(d)) fail(ErrorCode::InvalidMove, "move removes " + to_string(d) + " which is not in the tiling");
  std::vector<std::uint8_t> codes = t.codes();
  const Region& r = t.region();
  for (const Domino& d : placed) {
    const int w = r.index_of(d.white), b = r.index_of(d.black);
    if (w == Region::kNoCube || b == Region::kNoCube) fail(ErrorCode::InvalidMove, "move places " + to_string(d) + " outside the region");
    codes[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(d.v().index());
    codes[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((-d.v()).index());
  }
  return t.with_codes(std::move(codes));
}

bool same_cubes(std::span<const Domino> a, std::span<const Domino> b) {
  std::vector<Cube> ca, cb;
  for (const Domino& d : a) ca.insert(ca.end(), {d.white, d.black});
  for (const Domino& d : b) cb.insert(cb.end(), {d.white, d.black});
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb && std::adjacent_find(ca.begin(), ca.end()) == ca.end();
}

}  // namespace

Tiling apply_flip(const Tiling& t, const Flip& f) {
  if (!same_cubes(f.removed, f.placed)) fail(ErrorCode::InvalidMove, "flip does not preserve its slab");
  return replace_dominoes(t, f.removed, f.placed);
}

Flip reverse(const Flip& f) {
  Flip r = f;
  r.along = third_axis(f.normal, f.along);
  r.removed = f.placed;
  r.placed = f.removed;
  return r;
}

const std::array<Vec3, 6>& trit_cycle(int diagonal) {
  static const std::array<std::array<Vec3, 6>, 4> cycles = [] {
    std::array<std::array<Vec3, 6>, 4> out{};
    const std::array<Vec3, 4> holes{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{1, 1, 0}};
    for (std::size_t k = 0; k < 4; ++k) {
      const Vec3 h0 = holes[k], h1 = Vec3{1, 1, 1} - holes[k];
      std::vector<Vec3> rest;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int z = 0; z < 2; ++z)
            if (Vec3{x, y, z} != h0 && Vec3{x, y, z} != h1) rest.push_back({x, y, z});
      // Walk the hexagon from its smallest vertex towards its smaller neighbour.
      std::vector<Vec3> cyc{rest.front()};
      while (cyc.size() < 6) {
        const Vec3 cur = cyc.back();
        for (const Vec3& n : rest) {
          const Vec3 d = n - cur;
          if (!Dir::from_vec(d)) continue;
          if (std::find(cyc.begin(), cyc.end(), n) != cyc.end()) continue;
          cyc.push_back(n);
          break;
        }
      }
      std::copy(cyc.begin(), cyc.end(), out[k].begin());
    }
    return out;
  }();
  return cycles[static_cast<std::size_t>(diagonal)];
}

int trit_sign(std::span<const Domino, 3> removed, Vec3 anchor) {
  Config c;
  for (const Domino& d : removed) c.insert(make_edge(d.white.corner - anchor, d.black.corner - anchor));
  for (int d = 0; d < 4; ++d)
    for (int m = 0; m < 2; ++m)
      if (config_of(d, m) == c) return sign_table()[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)];
  fail(ErrorCode::InvalidArgument, "dominoes do not form a trit configuration");
}

std::vector<Trit> trits(const Tiling& t) {
  const Region& r = t.region();
  std::vector<Trit> out;
  if (r.empty()) return out;
  const Vec3 lo = r.bounds().lo, hi = r.bounds().hi;
  const auto& signs = sign_table();
  for (int x = lo.x; x + 1 < hi.x; ++x) {
    for (int y = lo.y; y + 1 < hi.y; ++y) {
      for (int z = lo.z; z + 1 < hi.z; ++z) {
        const Vec3 anchor{x, y, z};
        for (int d = 0; d < 4; ++d) {
          const auto& cyc = trit_cycle(d);
          std::array<int, 6> idx{};
          bool inside = true;
          for (std::size_t k = 0; k < 6 && inside; ++k) {
            idx[k] = r.index_of(Cube{anchor + cyc[k]});
            inside = idx[k] != Region::kNoCube;
          }
          if (!inside) continue;
          for (int m = 0; m < 2; ++m) {
            bool present = true;
            for (int e = 0; e < 3 && present; ++e) {
              const std::size_t a = static_cast<std::size_t>((m + 2 * e) % 6), b = static_cast<std::size_t>((m + 2 * e + 1) % 6);
              present = t.partner(idx[a]) == idx[b];
            }
            if (!present) continue;
            Trit tr;
            tr.anchor = anchor;
            tr.diagonal = d;
            tr.matching = m;
            tr.sign = signs[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)];
            for (int e = 0; e < 3; ++e) {
              const std::size_t a = static_cast<std::size_t>((m + 2 * e) % 6), b = static_cast<std::size_t>((m + 2 * e + 1) % 6);
              const std::size_t c = static_cast<std::size_t>((m + 2 * e + 1) % 6), dd = static_cast<std::size_t>((m + 2 * e + 2) % 6);
              tr.removed[static_cast<std::size_t>(e)] = domino_between(anchor, cyc[a], cyc[b]);
              tr.placed[static_cast<std::size_t>(e)] = domino_between(anchor, cyc[c], cyc[dd]);
            }
            std::sort(tr.removed.begin(), tr.removed.end());
            std::sort(tr.placed.begin(), tr.placed.end());
            out.push_back(tr);
          }
        }
      }
    }
  }
  return out;
}

Tiling apply_trit(const Tiling& t, const Trit& tr) {
  if (!same_cubes(tr.removed, tr.placed)) fail(ErrorCode::InvalidMove, "trit does not preserve its window");
  return replace_dominoes(t, tr.removed, tr.placed);
}

Trit reverse(const Trit& tr) {
  Trit r = tr;
  r.matching = 1 - tr.matching;
  r.sign = sign_table()[static_cast<std::size_t>(tr.diagonal)][static_cast<std::size_t>(r.matching)];
  r.removed = tr.placed;
  r.placed = tr.removed;
  return r;
}

nlohmann::json to_json(const Flip& f) {
  return {{"id", move_id(f)}, {"kind", "flip"}, {"anchor", {f.anchor.x, f.anchor.y, f.anchor.z}}, {"variant", f.variant()}, {"sign", 0}};
}

nlohmann::json to_json(const Trit& t) {
  return {{"id", move_id(t)}, {"kind", "trit"}, {"anchor", {t.anchor.x, t.anchor.y, t.anchor.z}}, {"variant", t.variant()}, {"sign", t.sign}};
}

std::string move_id(const Flip& f) {
  return "flip:" + std::to_string(f.anchor.x) + "," + std::to_string(f.anchor.y) + "," + std::to_string(f.anchor.z) + ":" + std::to_string(f.variant());
}

std::string move_id(const Trit& t) {
  return "trit:" + std::to_string(t.anchor.x) + "," + std::to_string(t.anchor.y) + "," + std::to_string(t.anchor.z) + ":" + std::to_string(t.variant());
}

}  // namespace dtwist
