#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "dtwist/curves.hpp"
#include "dtwist/twist.hpp"

namespace dtwist {

using Rational = boost::rational<long long>;

// Projection onto b3^perp along b3 + a b1 + b b2. Admissible when
// 0 < |a|, |b| < 1/N for the b3-length N of the region it is used on.
struct SlantProjection {
  Basis basis;
  Rational a;
  Rational b;
  int length = 1;  // N

  // Throws invalid-argument for an inadmissible slant.
  static SlantProjection make(Basis basis, Rational a, Rational b, int length);
  // a = sa/(N+1), b = sb/(N+1), with sa, sb in {-1, 1}.
  static SlantProjection standard(Basis basis, int length, int sa = 1, int sb = 1);
};

struct Crossing {
  Segment seg0;
  Segment seg1;
  Rational s0;
  Rational s1;
  int sign = 0;  // sign det(v1, v0, l1(s1) - l0(s0))
};

// The crossing of two segments under the projection, if their projections
// meet at distinct points of space. Throws degenerate-input if they meet at
// a segment endpoint.
std::optional<Crossing> crossing(const SlantProjection& p, const Segment& l0, const Segment& l1);

// det(v(l1), v(l0), b3) when the projections meet and l0 starts strictly
// below l1 along b3; zero otherwise.
int slanted_tau(const SlantProjection& p, const Segment& l0, const Segment& l1);

// (1/4) sum of slanted_tau over the four slants (+-e, +-e), e = 1/(N+1),
// for the basis Basis::with_third(u).
Quarter tau_via_slants(Dir u, const Segment& l0, const Segment& l1, int length);

// T^beta_{a,b}(A, B): sum of slanted_tau over l0 in A, l1 in B.
long long slanted_pretwist(const SlantProjection& p, std::span<const Segment> a, std::span<const Segment> b);

// b3-length of the smallest region containing the curves' cubes.
int curve_length(std::span<const Curve> curves, Dir b3);

// Half the signed crossing count of two vertex-disjoint curves. Throws
// not-disjoint if they share a vertex.
long long linking_number(const Curve& g0, const Curve& g1, const Basis& basis);

// Sum of self-crossing signs under the slant (a, b): T^beta_{a,b}(g).
long long directional_writhe(const Curve& g, const Basis& basis, Rational a, Rational b);

// (Wr+, Wr-) with slants (e, e) and (e, -e). The curve must alternate with
// segments parallel to b3 (a curve of Gamma(t, t_base) with axis b3).
std::pair<long long, long long> wr_pm(const Curve& g, const Basis& basis);

// +1 for (v_k, v_k+1) = (b2, b3) or (-b3, -b2); -1 for (-b2, -b3) or (b3, b2).
int eta(const Basis& basis, const Curve& g, std::size_t k);

// sum_i (Wr+ + Wr-)/2 + 2 sum_{i<j} Link over Gamma*(t, t_base) along the
// axis. The region must be a pseudocylinder of even depth along it.
long long twist_via_writhe(const Tiling& t, int axis);
// Uses the first pseudocylinder axis of even depth.
long long twist_via_writhe(const Tiling& t);

// All crossings between two segment lists, for debugging.
nlohmann::json crossings_json(const SlantProjection& p, std::span<const Segment> a, std::span<const Segment> b);

}  // namespace dtwist
