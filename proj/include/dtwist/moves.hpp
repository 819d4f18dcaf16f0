#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtwist/tiling.hpp"

namespace dtwist {

// Exchange of two parallel adjacent dominoes filling a 2x2x1 slab.
struct Flip {
  Vec3 anchor;                   // minimal corner of the slab
  int normal = 0;                // thin axis of the slab
  int along = 0;                 // axis the removed dominoes are parallel to
  std::array<Domino, 2> removed;
  std::array<Domino, 2> placed;

  // Index of (normal, along) in the six ordered pairs of distinct axes.
  int variant() const;
  friend bool operator==(const Flip&, const Flip&) = default;
};

// Rotation of three pairwise non-parallel dominoes around the six cubes of a
// 2x2x2 window left after removing two opposite corners.
struct Trit {
  Vec3 anchor;                   // minimal corner of the 2x2x2 window
  int diagonal = 0;              // 0..3, which pair of opposite corners is left out
  int matching = 0;              // which of the two matchings of the 6-cycle is removed
  int sign = 0;                  // +1 positive, -1 negative
  std::array<Domino, 3> removed;
  std::array<Domino, 3> placed;

  int variant() const { return 2 * diagonal + matching; }
  friend bool operator==(const Trit&, const Trit&) = default;
};

// All flips, ordered by slab corner, then variant.
std::vector<Flip> flips(const Tiling& t);
Tiling apply_flip(const Tiling& t, const Flip& f);
// The flip at the same slab that undoes f.
Flip reverse(const Flip& f);

// All trits, ordered by window corner, then variant.
std::vector<Trit> trits(const Tiling& t);
Tiling apply_trit(const Tiling& t, const Trit& tr);
Trit reverse(const Trit& tr);

// Sign of a trit whose removed dominoes are `removed`, read off by matching
// the window against the rotations of the positive reference configuration.
int trit_sign(std::span<const Domino, 3> removed, Vec3 anchor);

// Cube offsets (in {0,1}^3) of the hexagon for a diagonal, in cyclic order.
// Matching m removes edges (c[m], c[m+1]), (c[m+2], c[m+3]), (c[m+4], c[m+5 mod 6]).
const std::array<Vec3, 6>& trit_cycle(int diagonal);

nlohmann::json to_json(const Flip& f);
nlohmann::json to_json(const Trit& t);
// Stable textual id "flip:x,y,z:k" / "trit:x,y,z:k".
std::string move_id(const Flip& f);
std::string move_id(const Trit& t);

}  // namespace dtwist
