#pragma once

#include <stdexcept>
#include <string>

namespace qhd {

// Completion or normal-path enumeration ran past the configured length cap.
// Means the ideal is not admissible, or the cap is too small to tell.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given input.
struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& what)
      : std::runtime_error(what) {}
};

// Input exceeds a hard search bound (factorial enumeration guard).
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or consistency error in a presentation file.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

}  // namespace qhd
