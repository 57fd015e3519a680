#include "paco/errors.hpp"

namespace paco {

const char* axis_name(Axis a) {
  switch (a) {
    case Axis::lon: return "lon";
    case Axis::lat: return "lat";
    case Axis::time: return "time";
  }
  return "?";
}

WindowTooSmallError::WindowTooSmallError(Axis axis, double required_span, double actual_span)
    : ProfileRejection("window too small on axis " + std::string(axis_name(axis)) + ": span " +
                       std::to_string(actual_span) + " < required " +
                       std::to_string(required_span)),
      axis(axis),
      required_span(required_span),
      actual_span(actual_span) {}

FindPathTooRecentError::FindPathTooRecentError(double newest_allowed)
    : ProfileRejection("find_path endpoints too recent; newest allowed timestamp is " +
                       std::to_string(newest_allowed)),
      newest_allowed(newest_allowed) {}

}  // namespace paco
