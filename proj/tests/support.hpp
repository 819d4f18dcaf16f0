#pragma once

// Independent reference implementations used as oracles by the tests. They
// work on raw coordinates and do not call into the library's twist, moves or
// enumeration code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dtwist/io.hpp"
#include "dtwist/tiling.hpp"

namespace oracle {

using P3 = std::array<int, 3>;

inline std::string fixture_path(const std::string& name) { return std::string(DTWIST_FIXTURE_DIR) + "/" + name; }

inline dtwist::Tiling load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return dtwist::io::from_floors(os.str());
}

inline bool black(const P3& c) { return ((c[0] + c[1] + c[2]) & 1) != 0; }

struct RawDomino {
  P3 white;
  P3 black;
};

inline P3 p3(dtwist::Vec3 v) { return {v.x, v.y, v.z}; }

inline std::vector<RawDomino> raw(const dtwist::Tiling& t) {
  std::vector<RawDomino> out;
  for (const auto& d : t.dominoes()) out.push_back({p3(d.white.corner), p3(d.black.corner)});
  return out;
}

inline int det3(const P3& a, const P3& b, const P3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Does some cube of d1 lie strictly beyond a cube of d0 along u, outside d0?
inline bool meets_shade(const RawDomino& d0, const RawDomino& d1, const P3& u) {
  for (const P3& c1 : {d1.white, d1.black}) {
    if (c1 == d0.white || c1 == d0.black) continue;
    for (const P3& c0 : {d0.white, d0.black}) {
      const P3 diff = sub(c1, c0);
      int k = 0;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        if (u[i] == 0) {
          ok = ok && diff[i] == 0;
        } else {
          k = diff[i] * u[i];
        }
      }
      if (ok && k >= 1) return true;
    }
  }
  return false;
}

// 4 * T^u(t), straight from the definition.
inline long long pretwist4(const std::vector<RawDomino>& ds, const P3& u) {
  long long sum = 0;
  for (const auto& d0 : ds) {
    for (const auto& d1 : ds) {
      if (&d0 == &d1 || !meets_shade(d0, d1, u)) continue;
      sum += det3(sub(d1.black, d1.white), sub(d0.black, d0.white), u);
    }
  }
  return sum;
}

inline long long pretwist4(const dtwist::Tiling& t, int axis, int sign = 1) {
  P3 u{0, 0, 0};
  u[static_cast<std::size_t>(axis)] = sign;
  return pretwist4(raw(t), u);
}

// Number of perfect matchings of a cube set by plain backtracking.
inline std::uint64_t count_tilings(const std::vector<P3>& cubes) {
  std::set<P3> all(cubes.begin(), cubes.end());
  std::vector<P3> order(all.begin(), all.end());
  std::set<P3> used;
  std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t i) -> std::uint64_t {
    while (i < order.size() && used.count(order[i])) ++i;
    if (i == order.size()) return 1;
    const P3 c = order[i];
    std::uint64_t n = 0;
    used.insert(c);
    for (int a = 0; a < 3; ++a) {
      P3 o = c;
      ++o[static_cast<std::size_t>(a)];
      if (!all.count(o) || used.count(o)) continue;
      used.insert(o);
      n += rec(i + 1);
      used.erase(o);
    }
    used.erase(c);
    return n;
  };
  return rec(0);
}

inline std::vector<P3> box_cubes(int L, int M, int N) {
  std::vector<P3> out;
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < M; ++y)
      for (int z = 0; z < N; ++z) out.push_back({x, y, z});
  return out;
}

// Flips found by scanning pairs of parallel dominoes that fill a 2x2x1 slab.
inline int count_flips(const dtwist::Tiling& t) {
  const auto ds = raw(t);
  int n = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const P3 a = std::min(ds[i].white, ds[i].black), b = std::min(ds[j].white, ds[j].black);
      const P3 va = sub(std::max(ds[i].white, ds[i].black), a), vb = sub(std::max(ds[j].white, ds[j].black), b);
      if (va != vb) continue;
      const P3 off = sub(b, a);
      int dist = 0, along = 0;
      for (int k = 0; k < 3; ++k) {
        dist += std::abs(off[static_cast<std::size_t>(k)]);
        along += off[static_cast<std::size_t>(k)] * va[static_cast<std::size_t>(k)];
      }
      if (dist == 1 && along == 0) ++n;
    }
  }
  return n;
}

}  // namespace oracle
