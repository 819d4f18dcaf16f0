#include <doctest.h>

#include "dtwist/construct.hpp"
#include "dtwist/server.hpp"
#include "dtwist/twist.hpp"
#include "support.hpp"

using namespace dtwist;
using nlohmann::json;

namespace {

json post_move(Session& s, const std::string& id, int expect) {
  const auto r = s.handle("POST", "/api/v1/move", json{{"id", id}}.dump());
  CHECK(r.status == expect);
  return r.body;
}

}  // namespace

TEST_CASE("state of a fresh session") {
  Session s(oracle::load_fixture("three_flips.txt"));
  const auto r = s.handle("GET", "/api/v1/state", "");
  REQUIRE(r.status == 200);
  CHECK(r.body["twist"] == 0);
  CHECK(r.body["pretwists"]["z"] == "0");
  CHECK(r.body["history"].empty());
  CHECK(r.body["floors"].get<std::string>().rfind("origin", 0) == 0);
  CHECK(r.body["tiling"]["dominoes"].size() == 32);
}

TEST_CASE("moves endpoint lists flips and trits") {
  Session s(oracle::load_fixture("three_flips.txt"));
  const auto r = s.handle("GET", "/api/v1/moves", "");
  REQUIRE(r.status == 200);
  CHECK(r.body["flips"].size() == 3);
  for (const auto& f : r.body["flips"]) CHECK(f["kind"] == "flip");
  for (const auto& t : r.body["trits"]) CHECK((t["sign"] == 1 || t["sign"] == -1));
}

TEST_CASE("flips keep and trits shift the served twist") {
  Session s(oracle::load_fixture("three_flips.txt"));
  const auto moves = s.moves();
  const std::string flip_id = moves["flips"][0]["id"];
  auto body = post_move(s, flip_id, 200);
  CHECK(body["twist"] == 0);
  CHECK(body["history"].size() == 1);
  CHECK(body["history"][0]["kind"] == "flip");

  const auto trits = s.moves()["trits"];
  REQUIRE_FALSE(trits.empty());
  const int sign = trits[0]["sign"];
  body = post_move(s, trits[0]["id"], 200);
  CHECK(body["twist"] == sign);
  CHECK(body["history"][1]["sign"] == sign);
  CHECK(twist(s.current()) == sign);

  const auto undone = s.handle("POST", "/api/v1/undo", "");
  CHECK(undone.status == 200);
  CHECK(undone.body["twist"] == 0);
  CHECK(undone.body["history"].size() == 1);

  const auto reset = s.handle("POST", "/api/v1/reset", "");
  CHECK(reset.status == 200);
  CHECK(reset.body["history"].empty());
  CHECK(s.current() == oracle::load_fixture("three_flips.txt"));
}

TEST_CASE("error statuses") {
  Session s(oracle::load_fixture("frozen_depth3.txt"));
  CHECK(s.moves()["flips"].empty());
  CHECK(s.moves()["trits"].empty());
  post_move(s, "flip:0,0,0:0", 409);
  CHECK(s.handle("POST", "/api/v1/move", "not json").status == 400);
  CHECK(s.handle("POST", "/api/v1/move", "{\"move\": 1}").status == 400);
  CHECK(s.handle("POST", "/api/v1/undo", "").status == 409);
  CHECK(s.handle("GET", "/api/v1/nothing", "").status == 404);
  CHECK(s.handle("DELETE", "/api/v1/state", "").status == 404);
}

TEST_CASE("sessions on non-cylinders report no twist") {
  Session s(oracle::load_fixture("pseudocylinder_ring.txt"));
  const auto st = s.state();
  CHECK(st["twist"].is_null());
  CHECK(st["pretwists"]["z"] == "1");
  const auto fs = s.moves()["flips"];
  if (!fs.empty()) {
    const auto body = post_move(s, fs[0]["id"], 200);
    CHECK(body["twist"].is_null());
  }
}
