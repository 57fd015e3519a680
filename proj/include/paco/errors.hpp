#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace paco {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(std::uint64_t id)
      : Error("duplicate point id " + std::to_string(id)), id(id) {}
  std::uint64_t id;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; `line` is 1-based (0 when no line applies).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

class WindowError : public Error {
 public:
  using Error::Error;
};

/// Base of the access-profile refusals so callers can map them to one
/// exit path without losing the specific reason.
class ProfileRejection : public Error {
 public:
  using Error::Error;
};

enum class Axis { lon, lat, time };

const char* axis_name(Axis a);

class WindowTooSmallError : public ProfileRejection {
 public:
  WindowTooSmallError(Axis axis, double required_span, double actual_span);
  Axis axis;
  double required_span;
  double actual_span;
};

class FindPathForbiddenError : public ProfileRejection {
 public:
  FindPathForbiddenError() : ProfileRejection("find_path forbidden by access profile") {}
};

class FindPathTooRecentError : public ProfileRejection {
 public:
  explicit FindPathTooRecentError(double newest_allowed);
  /// Latest endpoint timestamp (seconds) the profile would have accepted.
  double newest_allowed;
};

}  // namespace paco
