#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dtwist/moves.hpp"

namespace dtwist {

// Single-user exploration session behind the HTTP API. Mutations are
// serialized; reads take a shared lock and see a consistent snapshot.
class Session {
 public:
  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  explicit Session(Tiling initial);

  // Routes /api/v1/{state,moves,move,undo,reset}.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

  nlohmann::json state() const;
  nlohmann::json moves() const;
  Tiling current() const;

 private:
  struct Entry {
    std::string id;
    std::string kind;
    int sign = 0;
    Tiling before;
    std::optional<long long> twist_before;
  };

  nlohmann::json state_locked() const;
  Response apply(std::string_view body);
  Response undo();
  Response reset();

  mutable std::shared_mutex mu_;
  Tiling initial_;
  Tiling current_;
  bool cylinder_ = false;
  std::optional<long long> twist_;
  std::vector<Entry> history_;
};

// Serves the session over HTTP until the process is stopped. When
// static_dir is set it is mounted at "/".
void serve(Session& session, const std::string& host, int port, const std::optional<std::string>& static_dir);

}  // namespace dtwist
