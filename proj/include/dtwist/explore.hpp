#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "dtwist/moves.hpp"

namespace dtwist {

using BigInt = boost::multiprecision::cpp_int;

// Streams every tiling of the region exactly once, covering the first
// uncovered cube (region order) by its +x, +y, +z partner in turn. The sink
// returns false to stop early. Returns the number of tilings delivered.
std::uint64_t enumerate(const Region& region, const std::function<bool(const Tiling&)>& sink);
// Collects at most `limit` tilings; throws resource-limit beyond that.
std::vector<Tiling> enumerate_all(const Region& region, std::size_t limit = 1'000'000);

struct CountOptions {
  int threads = 1;
  int max_face = 32;  // cells in the transfer face
};

// Number of tilings of the L x M x N box by a cell-by-cell transfer along
// the longest axis; the state is the set of face cells already covered.
BigInt count_box(int L, int M, int N, const CountOptions& opts = {});

struct ExploreOptions {
  std::size_t limit = 1'000'000;  // maximum number of tilings held
  int threads = 1;
};

struct Component {
  std::size_t size = 0;
  std::optional<long long> twist;  // set when the region is a cylinder
  Tiling representative;           // first tiling of the component in enumeration order
};

struct TritEdge {
  std::size_t from = 0;   // component before the positive trit
  std::size_t to = 0;     // component after it
  std::size_t count = 0;  // number of (tiling, positive trit) pairs
};

struct ComponentReport {
  bool complete = true;       // false when the tiling budget ran out
  std::size_t tilings = 0;
  std::vector<Component> components;  // ordered by representative
  std::vector<std::size_t> component_of;  // per enumerated tiling
  std::vector<TritEdge> trit_edges;
  std::map<long long, BigInt> twist_histogram;  // empty for non-cylinders
};

// Flip components of all tilings of the region. Asserts that flips keep
// and trits shift the twist by their sign on cylinders.
ComponentReport flip_components(const Region& region, const ExploreOptions& opts = {});

// Exact twist histogram of a cylinder's tilings. Throws resource-limit when
// more than opts.limit tilings exist.
std::map<long long, BigInt> twist_distribution(const Region& region, const ExploreOptions& opts = {});

// Tilings reachable from t by flips (and trits when with_trits). Throws
// resource-limit beyond `limit` tilings.
std::vector<Tiling> move_closure(const Tiling& t, bool with_trits, std::size_t limit = 1'000'000);

// Random walk that takes every trit of sign `direction` it finds and
// otherwise a uniformly random flip; returns the most extreme tiling seen.
Tiling trit_greedy_walk(const Tiling& start, int direction, std::uint64_t seed, std::size_t steps);

nlohmann::json to_json(const ComponentReport& report);
nlohmann::json histogram_json(const std::map<long long, BigInt>& h);

}  // namespace dtwist
