// dtwist: twist, moves and tiling-space exploration for 3D domino tilings.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dtwist/construct.hpp"
#include "dtwist/curves.hpp"
#include "dtwist/explore.hpp"
#include "dtwist/io.hpp"
#include "dtwist/knot.hpp"
#include "dtwist/server.hpp"
#include "dtwist/twist.hpp"

using namespace dtwist;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Tiling JSON, or floor notation when the file starts with "origin".
Tiling load_tiling(const std::string& path) {
  const std::string text = slurp(path);
  if (text.rfind("origin", 0) == 0) return io::from_floors(text);
  try {
    return io::tiling_from_json(json::parse(text));
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

Region load_region(const std::string& path, const std::vector<int>& box) {
  if (!box.empty()) return make_box(box[0], box[1], box[2]);
  if (path.empty()) fail(ErrorCode::InvalidArgument, "give --region FILE or --box L,M,N");
  return io::region_from_json(io::read_json_file(path));
}

int axis_or(const std::string& name, int fallback) {
  if (name.empty()) return fallback;
  const auto a = parse_axis(name);
  if (!a) fail(ErrorCode::InvalidArgument, "axis must be x, y or z");
  return *a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twist of 3D domino tilings"};
  app.require_subcommand(1);

  std::string region_path, tiling_path, other_path, axis_name_s, format = "text", static_dir, host = "127.0.0.1";
  std::vector<int> box;
  std::size_t limit = 1'000'000;
  int threads = 1, port = 8080;
  bool show_pretwists = false, via_writhe = false;

  auto add_region = [&](CLI::App* c) {
    c->add_option("-r,--region", region_path, "Region JSON file");
    c->add_option("--box", box, "Box dimensions L,M,N")->delimiter(',')->expected(3);
  };
  auto add_format = [&](CLI::App* c) { c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"})); };

  auto* count = app.add_subcommand("count", "Count tilings (transfer counting for boxes)");
  add_region(count);
  count->add_option("--threads", threads);
  count->add_option("--limit", limit, "Enumeration budget for non-box regions");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every tiling");
  add_region(enumerate_cmd);
  add_format(enumerate_cmd);
  enumerate_cmd->add_option("--limit", limit);
  enumerate_cmd->add_option("--axis", axis_name_s, "Floor axis for text output");

  auto* twist_cmd = app.add_subcommand("twist", "Twist of a tiling");
  twist_cmd->add_option("-t,--tiling", tiling_path, "Tiling JSON or floor file")->required();
  twist_cmd->add_flag("--pretwists", show_pretwists, "Print the three pretwists");
  twist_cmd->add_flag("--writhe", via_writhe, "Evaluate through curves, writhe and linking");
  twist_cmd->add_option("--axis", axis_name_s, "Axis for --writhe");
  add_format(twist_cmd);

  auto* comps = app.add_subcommand("components", "Flip components and twist histogram");
  add_region(comps);
  comps->add_option("--limit", limit);
  comps->add_option("--threads", threads);
  add_format(comps);

  auto* construct = app.add_subcommand("construct", "Tree construction on a planar base");
  construct->add_option("-r,--region", region_path, "Planar region JSON")->required();
  construct->add_option("--axis", axis_name_s, "Extrusion direction (default: plane normal)");
  add_format(construct);

  auto* validate_cmd = app.add_subcommand("validate", "Check that a tiling covers a region");
  validate_cmd->add_option("-t,--tiling", tiling_path)->required();
  add_region(validate_cmd);

  auto* gamma_cmd = app.add_subcommand("gamma", "Curves of the superposition of two tilings");
  gamma_cmd->add_option("-t,--tiling", tiling_path)->required();
  gamma_cmd->add_option("--other", other_path, "Second tiling (default: base tiling along --axis)");
  gamma_cmd->add_option("--axis", axis_name_s);
  add_format(gamma_cmd);

  auto* serve_cmd = app.add_subcommand("serve", "HTTP exploration session");
  serve_cmd->add_option("-t,--tiling", tiling_path);
  add_region(serve_cmd);
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--static", static_dir, "Directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) {
      if (!box.empty()) {
        std::cout << count_box(box[0], box[1], box[2], CountOptions{threads}).str() << '\n';
      } else {
        const Region r = load_region(region_path, box);
        std::size_t n = 0;
        enumerate(r, [&](const Tiling&) {
          if (++n > limit) fail(ErrorCode::ResourceLimit, "more than " + std::to_string(limit) + " tilings");
          return true;
        });
        std::cout << n << '\n';
      }
    } else if (enumerate_cmd->parsed()) {
      const Region r = load_region(region_path, box);
      const int axis = axis_or(axis_name_s, 2);
      const auto all = enumerate_all(r, limit);
      if (format == "json") {
        json arr = json::array();
        for (const Tiling& t : all) arr.push_back(io::tiling_to_json(t));
        std::cout << arr.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < all.size(); ++i) std::cout << (i ? "\n" : "") << io::to_floors(all[i], axis);
      }
    } else if (twist_cmd->parsed()) {
      const Tiling t = load_tiling(tiling_path);
      const auto p = pretwists(t);
      const bool cylinder = classify(t.region()).is_cylinder();
      if (show_pretwists) {
        if (format == "json")
          std::cout << json{{"x", to_string(p[0])}, {"y", to_string(p[1])}, {"z", to_string(p[2])}}.dump() << '\n';
        else
          std::cout << "x:" << to_string(p[0]) << " y:" << to_string(p[1]) << " z:" << to_string(p[2]) << '\n';
        if (!cylinder) {
          std::cerr << "error: unsupported-region: region is not a cylinder; the twist is undefined\n";
          return 1;
        }
        return 0;
      }
      const long long tw = via_writhe ? (axis_name_s.empty() ? twist_via_writhe(t) : twist_via_writhe(t, axis_or(axis_name_s, 2))) : twist(t);
      if (format == "json")
        std::cout << json{{"twist", tw}}.dump() << '\n';
      else
        std::cout << tw << '\n';
    } else if (comps->parsed()) {
      const Region r = load_region(region_path, box);
      const auto rep = flip_components(r, ExploreOptions{limit, threads});
      if (format == "json") {
        std::cout << to_json(rep).dump(2) << '\n';
      } else {
        std::cout << "tilings " << rep.tilings << "\ncomponents " << rep.components.size() << '\n';
        for (const auto& [k, v] : rep.twist_histogram) std::cout << "twist " << k << ": " << v.str() << '\n';
      }
      if (!rep.complete) {
        std::cerr << "error: resource-limit: more than " << limit << " tilings; report is partial\n";
        return 1;
      }
    } else if (construct->parsed()) {
      const PlanarRegion base = io::planar_from_json(io::read_json_file(region_path));
      const int axis = axis_or(axis_name_s, base.axis);
      const Tiling t = algorithm1(base, Dir(axis, 1));
      const Quarter tw = pretwist(t, Dir(axis, 1));
      if (format == "json") {
        json out = io::tiling_to_json(t);
        out["pretwist"] = to_string(tw);
        std::cout << out.dump() << '\n';
      } else {
        std::cout << io::to_floors(t, axis) << "pretwist " << to_string(tw) << '\n';
      }
    } else if (validate_cmd->parsed()) {
      const Tiling t = load_tiling(tiling_path);
      if (!region_path.empty() || !box.empty()) {
        const Region r = load_region(region_path, box);
        validate(r, t.dominoes());
      }
      std::cout << "valid: " << t.size() << " dominoes, " << to_string(classify(t.region()).kind) << '\n';
    } else if (gamma_cmd->parsed()) {
      const Tiling t = load_tiling(tiling_path);
      const Tiling other = other_path.empty() ? base_tiling(t.region_ptr(), axis_or(axis_name_s, 2)) : load_tiling(other_path);
      const CurveSet cs = gamma(t, other);
      const auto nt = nontrivial(cs);
      if (format == "json") {
        json curves = json::array();
        for (const Curve& c : cs.curves) curves.push_back(to_json(c));
        std::cout << json{{"curves", curves}, {"nontrivial", nt.size()}}.dump() << '\n';
      } else {
        std::cout << "curves " << cs.curves.size() << "\nnontrivial " << nt.size() << '\n';
      }
    } else if (serve_cmd->parsed()) {
      Tiling t;
      if (!tiling_path.empty()) {
        t = load_tiling(tiling_path);
      } else {
        const auto found = find_tiling(load_region(region_path, box));
        if (!found) fail(ErrorCode::InvalidArgument, "region has no tiling");
        t = *found;
      }
      Session session(t);
      std::cerr << "serving on http://" << host << ":" << port << "/api/v1\n";
      serve(session, host, port, static_dir.empty() ? std::nullopt : std::optional<std::string>(static_dir));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
