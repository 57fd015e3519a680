#pragma once

namespace paco {

inline constexpr double kEarthRadiusM = 6371000.0;
inline constexpr double kPi = 3.14159265358979323846;

/// Meters per degree of latitude (and of longitude at the equator).
inline constexpr double kMetersPerDegree = kEarthRadiusM * kPi / 180.0;

constexpr double radians(double deg) { return deg * (kPi / 180.0); }
constexpr double degrees(double rad) { return rad * (180.0 / kPi); }

/// Wraps a longitude into [-180, 180).
double normalize_lon(double lon_deg);

/// Position in decimal degrees. Valid when lat is in [-90, 90] and lon
/// in [-180, 180).
struct GeoCoord {
  double lon = 0.0;
  double lat = 0.0;
};

bool operator==(const GeoCoord& a, const GeoCoord& b);
bool valid_coord(const GeoCoord& c);

/// Axis-aligned, non-wrapping box: min.lon <= max.lon, min.lat <= max.lat.
/// Bounds are inclusive on all edges.
struct GeoBox {
  GeoCoord min;
  GeoCoord max;

  bool contains(const GeoCoord& c) const {
    return c.lon >= min.lon && c.lon <= max.lon && c.lat >= min.lat && c.lat <= max.lat;
  }
};

bool valid_box(const GeoBox& b);

/// Great-circle distance in meters on a sphere of radius kEarthRadiusM.
double haversine_distance(const GeoCoord& a, const GeoCoord& b);

/// Half-width in degrees of longitude of the spherical cap of radius
/// `half_extent_m` centered at latitude `lat_deg`; 180 when the cap
/// reaches a pole.
double lon_halfspan_deg(double half_extent_m, double lat_deg);

/// Bounding box of the spherical cap of radius `half_extent_m` around
/// `center`: every point within that distance lies inside the box.
/// Latitude clamps at the poles; longitude clamps at the antimeridian
/// (wrapping boxes are not representable).
GeoBox expand_box(const GeoCoord& center, double half_extent_m);

/// Point of `box` closest to `q` by great-circle distance; `q` itself
/// when it lies inside.
GeoCoord closest_point_in_box(const GeoBox& box, const GeoCoord& q);

/// Position reached from `start` after `distance_m` meters on the given
/// initial bearing (radians, 0 = north, pi/2 = east).
GeoCoord destination_point(const GeoCoord& start, double bearing_rad, double distance_m);

}  // namespace paco
