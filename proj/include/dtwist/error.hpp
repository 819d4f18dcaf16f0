#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtwist {

enum class ErrorCode {
  InvalidArgument,
  UnsupportedRegion,
  InvariantViolation,
  NotEmbeddable,
  DegenerateInput,
  NotDisjoint,
  InvalidMove,
  ResourceLimit,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every library operation. The code lets callers
// (the CLI, the HTTP layer) map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace dtwist
