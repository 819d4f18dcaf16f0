#pragma once

#include <vector>

#include <json.hpp>

#include "dtwist/tiling.hpp"

namespace dtwist {

// Closed curve: segments[k].end2 == segments[k+1].start2, cyclically.
// Stored rotated so that the smallest vertex comes first.
struct Curve {
  std::vector<Segment> segments;

  std::size_t size() const { return segments.size(); }
  bool trivial() const { return segments.size() == 2; }
  // Vertices in doubled coordinates, in curve order.
  std::vector<Vec3> vertices() const;

  // Rotates the sequence so the smallest start vertex comes first.
  static Curve canonical(std::vector<Segment> segments);
  // Throws invalid-argument if the segments do not close up.
  void check_closed() const;

  friend bool operator==(const Curve&, const Curve&) = default;
  friend auto operator<=>(const Curve& a, const Curve& b) { return a.segments <=> b.segments; }
};

struct CurveSet {
  std::vector<Curve> curves;          // sorted
  std::vector<Segment> all_segments;  // t0 followed by -t1
};

// Decomposition of t0 u (-t1) into closed curves: from each white cube not
// yet visited, follow its t0 dimer, then the reversed t1 dimer, and so on.
CurveSet gamma(const Tiling& t0, const Tiling& t1);
std::vector<Curve> nontrivial(const CurveSet& cs);

// Winding number of the orthogonal projection along `axis` around a point
// given in doubled coordinates (the component along `axis` is ignored).
// Counts segments crossing the ray from the point in direction b1 of
// Basis::with_third(axis). Throws degenerate-input if the point lies on the
// projected curve.
int winding(const Curve& c, Dir axis, Vec3 point2);

nlohmann::json to_json(const Curve& c);

}  // namespace dtwist
