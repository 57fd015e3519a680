#pragma once

#include <cstdint>

#include "paco/geo.hpp"

namespace paco {

/// One stored observation: position in degrees, unix time in seconds,
/// and an opaque identifier that ties the sample back to whatever
/// application context produced it. Ids are unique within one store.
struct ContextPoint {
  double x = 0.0;  // longitude, degrees
  double y = 0.0;  // latitude, degrees
  std::int64_t t = 0;
  std::uint64_t id = 0;
};

inline bool operator==(const ContextPoint& a, const ContextPoint& b) {
  return a.x == b.x && a.y == b.y && a.t == b.t && a.id == b.id;
}
inline bool operator!=(const ContextPoint& a, const ContextPoint& b) { return !(a == b); }

/// Free-standing space-time position used as a query argument or a
/// sub-cube target. Time is fractional seconds.
struct QueryPoint {
  double lon = 0.0;
  double lat = 0.0;
  double t = 0.0;
};

inline QueryPoint to_query_point(const ContextPoint& p) {
  return {p.x, p.y, static_cast<double>(p.t)};
}

struct TimeInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// Spatiotemporal query box; inclusive on every bound.
struct StBox {
  GeoBox space;
  TimeInterval time;

  bool contains(const ContextPoint& p) const {
    return space.contains({p.x, p.y}) && time.contains(static_cast<double>(p.t));
  }
};

}  // namespace paco
