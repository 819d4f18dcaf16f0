#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtwist/tiling.hpp"

namespace dtwist {

// Exact multiple of 1/4.
class Quarter {
 public:
  constexpr Quarter() = default;
  static constexpr Quarter quarters(long long n) { return Quarter(n); }
  static constexpr Quarter integer(long long n) { return Quarter(4 * n); }

  constexpr long long quarters() const { return q_; }
  constexpr bool is_integer() const { return q_ % 4 == 0; }
  // Throws invariant-violation when not integral.
  long long to_integer() const;

  constexpr Quarter operator-() const { return Quarter(-q_); }
  constexpr Quarter& operator+=(Quarter o) { q_ += o.q_; return *this; }
  constexpr Quarter& operator-=(Quarter o) { q_ -= o.q_; return *this; }
  friend constexpr Quarter operator+(Quarter a, Quarter b) { return a += b; }
  friend constexpr Quarter operator-(Quarter a, Quarter b) { return a -= b; }
  friend constexpr Quarter operator*(long long k, Quarter a) { return Quarter(k * a.q_); }
  friend constexpr auto operator<=>(const Quarter&, const Quarter&) = default;

 private:
  constexpr explicit Quarter(long long q) : q_(q) {}
  long long q_ = 0;
};

// "k/4" reduced ("1/4", "-1/2", "3/4"), or the integer when divisible by 4.
std::string to_string(Quarter q);

// Effect of d0 on d1 along u: det(v(d1), v(d0), u)/4 when d1 meets the open
// u-shade of d0, zero otherwise.
Quarter tau(Dir u, const Domino& d0, const Domino& d1);
// Segment version: projections along u intersect and l0 starts strictly
// below l1 in the u direction.
Quarter tau(Dir u, const Segment& l0, const Segment& l1);

// Cubes of `region` in the open u-shade of `source`: not in the source, in a
// column (parallel to u) through a source cube and strictly beyond it.
std::vector<Cube> shade(const Region& region, std::span<const Cube> source, Dir u);

// Sum of tau over all ordered pairs of dominoes.
Quarter pretwist(const Tiling& t, Dir u);
// The same sum evaluated literally over all pairs; O(n^2).
Quarter pretwist_pairs(const Tiling& t, Dir u);
// Pretwists along e_x, e_y, e_z.
std::array<Quarter, 3> pretwists(const Tiling& t);

// Common value of the three pretwists of a cylinder tiling. Throws
// unsupported-region for other regions and invariant-violation if the
// pretwists disagree or are not integers.
long long twist(const Tiling& t);

// T^u(A0, A1) = sum over l0 in A0, l1 in A1 of tau(u, l0, l1).
Quarter segment_pretwist(Dir u, std::span<const Segment> a0, std::span<const Segment> a1);
Quarter segment_pretwist(Dir u, std::span<const Segment> a);
// The segment multiset t0 u (-t1).
std::vector<Segment> signed_union(const Tiling& t0, const Tiling& t1);

struct EmbeddingOptions {
  int max_growth = 4;                  // faces grown by up to this many layers
  long long node_limit = 2'000'000;    // backtracking nodes per attempted box
};

// Box containing the region plus a tiling of box minus region.
struct Embedding {
  Region box;
  Tiling complement;
};

// Tries the bounding box, then boxes grown by 1, 2, ... on every face; at
// each size also with one extra layer on the high faces of some axes.
std::optional<Embedding> find_embedding(const Region& region, const EmbeddingOptions& opts = {});

// Tw(t0 + t*) - Tw(t1 + t*) for a found complement tiling t*. Throws
// not-embeddable when no complement is found within the budget.
long long relative_twist(const Region& region, const Tiling& t0, const Tiling& t1, const EmbeddingOptions& opts = {});
// Same, with an explicit complement tiling.
long long relative_twist(const Tiling& t0, const Tiling& t1, const Tiling& complement);

}  // namespace dtwist
