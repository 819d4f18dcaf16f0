#include "dtwist/server.hpp"

#include <mutex>

#include <httplib.h>

#include "dtwist/io.hpp"
#include "dtwist/twist.hpp"

namespace dtwist {

namespace {

Session::Response error(int status, const std::string& msg) { return {status, {{"error", msg}}}; }

}  // namespace

Session::Session(Tiling initial) : initial_(initial), current_(std::move(initial)) {
  cylinder_ = classify(current_.region()).is_cylinder();
  if (cylinder_) twist_ = twist(current_);
}

Tiling Session::current() const {
  std::shared_lock lock(mu_);
  return current_;
}

nlohmann::json Session::state() const {
  std::shared_lock lock(mu_);
  return state_locked();
}

nlohmann::json Session::state_locked() const {
  const auto p = pretwists(current_);
  nlohmann::json hist = nlohmann::json::array();
  for (const Entry& e : history_) hist.push_back({{"id", e.id}, {"kind", e.kind}, {"sign", e.sign}});
  return {{"region", io::region_to_json(current_.region())},
          {"tiling", io::tiling_to_json(current_)},
          {"floors", io::to_floors(current_)},
          {"twist", twist_ ? nlohmann::json(*twist_) : nlohmann::json(nullptr)},
          {"pretwists", {{"x", to_string(p[0])}, {"y", to_string(p[1])}, {"z", to_string(p[2])}}},
          {"history", hist}};
}

nlohmann::json Session::moves() const {
  std::shared_lock lock(mu_);
  nlohmann::json fs = nlohmann::json::array(), ts = nlohmann::json::array();
  for (const Flip& f : flips(current_)) fs.push_back(to_json(f));
  for (const Trit& t : trits(current_)) ts.push_back(to_json(t));
  return {{"flips", fs}, {"trits", ts}};
}

Session::Response Session::handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    if (method == "GET" && path == "/api/v1/state") return {200, state()};
    if (method == "GET" && path == "/api/v1/moves") return {200, moves()};
    if (method == "POST" && path == "/api/v1/move") return apply(body);
    if (method == "POST" && path == "/api/v1/undo") return undo();
    if (method == "POST" && path == "/api/v1/reset") return reset();
    return error(404, "no such endpoint");
  } catch (const Error& e) {
    return error(e.code() == ErrorCode::InvariantViolation ? 500 : 400, e.what());
  }
}

Session::Response Session::apply(std::string_view body) {
  std::string id;
  try {
    const auto j = nlohmann::json::parse(body);
    id = j.at("id").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return error(400, "body must be {\"id\": \"<move id>\"}");
  }
  std::unique_lock lock(mu_);
  Entry entry{id, "", 0, current_, twist_};
  std::optional<Tiling> next;
  for (const Flip& f : flips(current_)) {
    if (move_id(f) != id) continue;
    next = apply_flip(current_, f);
    entry.kind = "flip";
  }
  if (!next) {
    for (const Trit& t : trits(current_)) {
      if (move_id(t) != id) continue;
      next = apply_trit(current_, t);
      entry.kind = "trit";
      entry.sign = t.sign;
    }
  }
  if (!next) return error(409, "move " + id + " is not available in the current tiling");
  if (cylinder_) {
    const long long tw = twist(*next);
    if (tw - *twist_ != entry.sign) fail(ErrorCode::InvariantViolation, "move " + id + " changed the twist by " + std::to_string(tw - *twist_));
    twist_ = tw;
  }
  current_ = std::move(*next);
  history_.push_back(std::move(entry));
  return {200, state_locked()};
}

Session::Response Session::undo() {
  std::unique_lock lock(mu_);
  if (history_.empty()) return error(409, "nothing to undo");
  current_ = history_.back().before;
  twist_ = history_.back().twist_before;
  history_.pop_back();
  return {200, state_locked()};
}

Session::Response Session::reset() {
  std::unique_lock lock(mu_);
  current_ = initial_;
  history_.clear();
  twist_ = cylinder_ ? std::optional<long long>(twist(current_)) : std::nullopt;
  return {200, state_locked()};
}

void serve(Session& session, const std::string& host, int port, const std::optional<std::string>& static_dir) {
  httplib::Server srv;
  auto route = [&session](const httplib::Request& req, httplib::Response& res) {
    const auto r = session.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  for (const char* p : {"/api/v1/state", "/api/v1/moves"}) srv.Get(p, route);
  for (const char* p : {"/api/v1/move", "/api/v1/undo", "/api/v1/reset"}) srv.Post(p, route);
  if (static_dir && !srv.set_mount_point("/", *static_dir)) fail(ErrorCode::InvalidArgument, "cannot mount " + *static_dir);
  if (!srv.bind_to_port(host, port)) fail(ErrorCode::InvalidArgument, "cannot bind " + host + ":" + std::to_string(port));
  srv.listen_after_bind();
}

}  // namespace dtwist
