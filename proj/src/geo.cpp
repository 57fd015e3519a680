#include "paco/geo.hpp"

#include <algorithm>
#include <cmath>

namespace paco {

double normalize_lon(double lon_deg) {
  double x = std::fmod(lon_deg + 180.0, 360.0);
  if (x < 0.0) x += 360.0;
  return x - 180.0;
}

bool operator==(const GeoCoord& a, const GeoCoord& b) { return a.lon == b.lon && a.lat == b.lat; }

bool valid_coord(const GeoCoord& c) {
  return std::isfinite(c.lon) && std::isfinite(c.lat) && c.lat >= -90.0 && c.lat <= 90.0 &&
         c.lon >= -180.0 && c.lon < 180.0;
}

bool valid_box(const GeoBox& b) {
  return std::isfinite(b.min.lon) && std::isfinite(b.max.lon) && std::isfinite(b.min.lat) &&
         std::isfinite(b.max.lat) && b.min.lon <= b.max.lon && b.min.lat <= b.max.lat &&
         b.min.lat >= -90.0 && b.max.lat <= 90.0 && b.min.lon >= -180.0 && b.max.lon <= 180.0;
}

double haversine_distance(const GeoCoord& a, const GeoCoord& b) {
  const double sp = std::sin(radians(b.lat - a.lat) / 2.0);
  const double sl = std::sin(radians(b.lon - a.lon) / 2.0);
  const double h = sp * sp + std::cos(radians(a.lat)) * std::cos(radians(b.lat)) * sl * sl;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

double lon_halfspan_deg(double half_extent_m, double lat_deg) {
  const double delta = half_extent_m / kEarthRadiusM;
  if (delta >= kPi / 2.0) return 180.0;
  const double cos_lat = std::cos(radians(lat_deg));
  const double s = std::sin(delta);
  if (s >= cos_lat) return 180.0;
  return degrees(std::asin(s / cos_lat));
}

GeoBox expand_box(const GeoCoord& center, double half_extent_m) {
  const double dlat = degrees(half_extent_m / kEarthRadiusM);
  const double lat_lo = center.lat - dlat;
  const double lat_hi = center.lat + dlat;

  GeoBox b;
  b.min.lat = std::max(-90.0, lat_lo);
  b.max.lat = std::min(90.0, lat_hi);
  if (lat_lo <= -90.0 || lat_hi >= 90.0) {
    // Cap touches a pole: it spans all longitudes.
    b.min.lon = -180.0;
    b.max.lon = 180.0;
    return b;
  }
  const double dlon = lon_halfspan_deg(half_extent_m, center.lat);
  b.min.lon = std::max(-180.0, center.lon - dlon);
  b.max.lon = std::min(180.0, center.lon + dlon);
  return b;
}

namespace {

/// Smallest angular separation of two longitudes, in [0, 180].
double lon_separation(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 360.0 - d);
}

}  // namespace

GeoCoord closest_point_in_box(const GeoBox& box, const GeoCoord& q) {
  // Longitude: the separation to the interval is zero inside, otherwise
  // attained at one of the two edges.
  double lam;
  if (q.lon >= box.min.lon && q.lon <= box.max.lon) {
    lam = q.lon;
  } else {
    lam = lon_separation(q.lon, box.min.lon) <= lon_separation(q.lon, box.max.lon) ? box.min.lon
                                                                                   : box.max.lon;
  }

  // For fixed Δλ the chord maximand is A cosφ + B sinφ; its optimum over
  // the latitude interval is at an endpoint or the interior stationary
  // point atan2(B, A).
  const double dlam = radians(lon_separation(q.lon, lam));
  const double a = std::cos(radians(q.lat)) * std::cos(dlam);
  const double b = std::sin(radians(q.lat));

  double best_lat = box.min.lat;
  double best_f = a * std::cos(radians(box.min.lat)) + b * std::sin(radians(box.min.lat));
  const double f_hi = a * std::cos(radians(box.max.lat)) + b * std::sin(radians(box.max.lat));
  if (f_hi > best_f) {
    best_f = f_hi;
    best_lat = box.max.lat;
  }
  const double phi0 = degrees(std::atan2(b, a));
  if (phi0 >= box.min.lat && phi0 <= box.max.lat) {
    const double f0 = a * std::cos(radians(phi0)) + b * std::sin(radians(phi0));
    if (f0 > best_f) best_lat = phi0;
  }
  return {lam, best_lat};
}

GeoCoord destination_point(const GeoCoord& start, double bearing_rad, double distance_m) {
  const double delta = distance_m / kEarthRadiusM;
  const double phi1 = radians(start.lat);
  const double sin_phi2 =
      std::sin(phi1) * std::cos(delta) + std::cos(phi1) * std::sin(delta) * std::cos(bearing_rad);
  const double phi2 = std::asin(std::clamp(sin_phi2, -1.0, 1.0));
  const double y = std::sin(bearing_rad) * std::sin(delta) * std::cos(phi1);
  const double x = std::cos(delta) - std::sin(phi1) * sin_phi2;
  const double lam2 = radians(start.lon) + std::atan2(y, x);
  return {normalize_lon(degrees(lam2)), degrees(phi2)};
}

}  // namespace paco
