#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dtwist/geometry.hpp"
#include "dtwist/tiling.hpp"

namespace dtwist::io {

using nlohmann::json;

// {"cubes": [[x,y,z], ...]}, {"box": [L,M,N]} or
// {"cylinder": {"base": [[i,j],...], "plane": {"axis":"z","level":0}, "depth": n}}.
Region region_from_json(const json& j);
json region_to_json(const Region& region);

// {"base": [[i,j],...], "plane": {"axis":"z","level":0}}; accepts the
// "cylinder" shape too (the depth is ignored).
PlanarRegion planar_from_json(const json& j);
json planar_to_json(const PlanarRegion& base);

// {"dominoes": [[[x,y,z],[x',y',z']], ...]}, white cube first. An optional
// "region" member (any region form) is validated against the dominoes.
Tiling tiling_from_json(const json& j);
json tiling_to_json(const Tiling& t);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// Floor notation. Floors are drawn left to right in increasing b3
// coordinate for the basis whose third vector is +axis; every floor is a
// character grid (rows top to bottom in decreasing b2, columns in increasing
// b1). Cells: 'E'/'W' partner at +-b1, 'N'/'S' partner at +-b2, '<' partner
// on the previous floor, '>' partner on the next floor, '.' not in region.
//
//   origin X Y Z axis z
//   <row of floor 0> <row of floor 1> ...
std::string to_floors(const Tiling& t, int axis = 2);
Tiling from_floors(std::string_view text);

}  // namespace dtwist::io
