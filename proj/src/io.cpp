#include "dtwist/io.hpp"

#include <fstream>
#include <sstream>

namespace dtwist::io {

namespace {

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorCode::Parse, "expected [x,y,z], got " + j.dump());
  return Vec3{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json vec_to_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

int axis_from_json(const json& j) {
  if (j.is_number_integer()) {
    const int a = j.get<int>();
    if (a < 0 || a > 2) fail(ErrorCode::Parse, "axis out of range");
    return a;
  }
  const auto a = parse_axis(j.get<std::string>());
  if (!a) fail(ErrorCode::Parse, "axis must be x, y or z");
  return *a;
}

}  // namespace

PlanarRegion planar_from_json(const json& in) {
  const json& j = in.contains("cylinder") ? in.at("cylinder") : in;
  try {
    std::vector<std::pair<int, int>> squares;
    for (const json& s : j.at("base")) {
      if (!s.is_array() || s.size() != 2) fail(ErrorCode::Parse, "base squares are [i,j] pairs");
      squares.emplace_back(s[0].get<int>(), s[1].get<int>());
    }
    int axis = 2, level = 0;
    if (j.contains("plane")) {
      axis = axis_from_json(j.at("plane").at("axis"));
      level = j.at("plane").value("level", 0);
    }
    return PlanarRegion::make(axis, level, std::move(squares));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad planar region: ") + e.what());
  }
}

json planar_to_json(const PlanarRegion& base) {
  json sq = json::array();
  for (auto [u, v] : base.squares) sq.push_back(json::array({u, v}));
  return json{{"base", sq}, {"plane", {{"axis", std::string(1, axis_name(base.axis))}, {"level", base.level}}}};
}

Region region_from_json(const json& j) {
  try {
    if (j.contains("box")) {
      const json& b = j.at("box");
      if (!b.is_array() || b.size() != 3) fail(ErrorCode::Parse, "box expects [L,M,N]");
      return make_box(b[0].get<int>(), b[1].get<int>(), b[2].get<int>());
    }
    if (j.contains("cylinder")) {
      const PlanarRegion base = planar_from_json(j);
      const int depth = j.at("cylinder").at("depth").get<int>();
      return make_cylinder(base, Dir(base.axis, 1), depth);
    }
    if (j.contains("cubes")) {
      std::vector<Cube> cubes;
      for (const json& c : j.at("cubes")) cubes.push_back(Cube{vec_from_json(c)});
      return Region::from_unique(std::move(cubes));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad region: ") + e.what());
  }
  fail(ErrorCode::Parse, "region needs one of \"cubes\", \"box\", \"cylinder\"");
}

json region_to_json(const Region& region) {
  json cubes = json::array();
  for (const Cube& c : region.cubes()) cubes.push_back(vec_to_json(c.corner));
  return json{{"cubes", cubes}};
}

Tiling tiling_from_json(const json& j) {
  std::vector<Domino> dominoes;
  try {
    for (const json& d : j.at("dominoes")) {
      if (!d.is_array() || d.size() != 2) fail(ErrorCode::Parse, "domino expects [[x,y,z],[x,y,z]]");
      dominoes.push_back(Domino{Cube{vec_from_json(d[0])}, Cube{vec_from_json(d[1])}});
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("bad tiling: ") + e.what());
  }
  if (j.contains("region")) return validate(region_from_json(j.at("region")), dominoes);
  return tiling_from_dominoes(dominoes);
}

json tiling_to_json(const Tiling& t) {
  json ds = json::array();
  for (const Domino& d : t.dominoes()) ds.push_back(json::array({vec_to_json(d.white.corner), vec_to_json(d.black.corner)}));
  return json{{"dominoes", ds}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- floors

std::string to_floors(const Tiling& t, int axis) {
  const Region& r = t.region();
  if (r.empty()) fail(ErrorCode::InvalidArgument, "empty tiling has no floor notation");
  const Basis basis = Basis::with_third(Dir(axis, 1));
  const int a1 = basis.b1.axis(), a2 = basis.b2.axis();
  const Vec3 lo = r.bounds().lo, ext = r.bounds().extent();
  std::ostringstream os;
  os << "origin " << lo.x << ' ' << lo.y << ' ' << lo.z << " axis " << axis_name(axis) << '\n';
  for (int row = ext[a2] - 1; row >= 0; --row) {
    for (int f = 0; f < ext[axis]; ++f) {
      if (f) os << ' ';
      for (int col = 0; col < ext[a1]; ++col) {
        Vec3 c = lo;
        c.at(a1) += col;
        c.at(a2) += row;
        c.at(axis) += f;
        const int i = r.index_of(Cube{c});
        if (i == Region::kNoCube) {
          os << '.';
          continue;
        }
        const Dir d = t.partner_dir(i);
        if (d == basis.b1) os << 'E';
        else if (d == -basis.b1) os << 'W';
        else if (d == basis.b2) os << 'N';
        else if (d == -basis.b2) os << 'S';
        else if (d == basis.b3) os << '>';
        else os << '<';
      }
    }
    os << '\n';
  }
  return os.str();
}

Tiling from_floors(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) fail(ErrorCode::Parse, "empty floor notation");
  std::istringstream hs(header);
  std::string kw, axis_kw, axis_s;
  Vec3 lo;
  if (!(hs >> kw >> lo.x >> lo.y >> lo.z >> axis_kw >> axis_s) || kw != "origin" || axis_kw != "axis")
    fail(ErrorCode::Parse, "floor header must be 'origin X Y Z axis A'");
  const auto axis = parse_axis(axis_s);
  if (!axis) fail(ErrorCode::Parse, "floor axis must be x, y or z");
  const Basis basis = Basis::with_third(Dir(*axis, 1));
  const int a1 = basis.b1.axis(), a2 = basis.b2.axis();

  std::vector<std::vector<std::string>> rows;  // rows[row][floor]
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> floors;
    std::string tok;
    while (ls >> tok) floors.push_back(tok);
    rows.push_back(std::move(floors));
  }
  if (rows.empty()) fail(ErrorCode::Parse, "floor notation has no rows");
  const std::size_t nfloors = rows[0].size(), width = rows[0][0].size();
  for (const auto& row : rows) {
    if (row.size() != nfloors) fail(ErrorCode::Parse, "rows disagree on the number of floors");
    for (const auto& f : row)
      if (f.size() != width) fail(ErrorCode::Parse, "floors disagree on width");
  }
  const int height = static_cast<int>(rows.size());
  std::vector<Domino> dominoes;
  std::vector<Cube> cubes;
  for (int r = 0; r < height; ++r) {
    for (std::size_t f = 0; f < nfloors; ++f) {
      for (std::size_t col = 0; col < width; ++col) {
        const char ch = rows[static_cast<std::size_t>(r)][f][col];
        if (ch == '.') continue;
        Vec3 c = lo;
        c.at(a1) += static_cast<int>(col);
        c.at(a2) += height - 1 - r;
        c.at(*axis) += static_cast<int>(f);
        Dir d;
        switch (ch) {
          case 'E': d = basis.b1; break;
          case 'W': d = -basis.b1; break;
          case 'N': d = basis.b2; break;
          case 'S': d = -basis.b2; break;
          case '>': d = basis.b3; break;
          case '<': d = -basis.b3; break;
          default: fail(ErrorCode::Parse, std::string("unknown floor glyph '") + ch + "'");
        }
        const Cube cube{c};
        cubes.push_back(cube);
        const Cube other = cube.neighbor(d);
        // Record every domino once, from its white cube; the partner's glyph
        // is checked by validation of the resulting cover below.
        if (cube.white()) dominoes.push_back(Domino{cube, other});
      }
    }
  }
  Tiling t = validate(Region::from_unique(std::move(cubes)), dominoes);
  if (to_floors(t, *axis) != header + "\n" + [&] {
        std::string body;
        for (const auto& row : rows) {
          for (std::size_t f = 0; f < row.size(); ++f) body += (f ? " " : "") + row[f];
          body += '\n';
        }
        return body;
      }())
    fail(ErrorCode::Parse, "floor notation is inconsistent or not canonical (partner glyphs or origin mismatch)");
  return t;
}

}  // namespace dtwist::io
