#include "paco/profiles.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "paco/geo.hpp"

namespace paco {

const AccessProfile& open_profile() {
  static const AccessProfile p{"open", 0.5, 2.0, 0.0, FindPathPolicy::allowed, 0.0};
  return p;
}

const AccessProfile& guarded_profile() {
  static const AccessProfile p{"guarded", 0.5, 1.0, 5.0, FindPathPolicy::min_age, 86400.0};
  return p;
}

const AccessProfile& restricted_profile() {
  static const AccessProfile p{"restricted", 0.5, 0.5, 20.0, FindPathPolicy::forbidden, 0.0};
  return p;
}

std::vector<AccessProfile> builtin_profiles() {
  return {open_profile(), guarded_profile(), restricted_profile()};
}

std::optional<AccessProfile> find_profile(std::span<const AccessProfile> profiles,
                                          std::string_view name) {
  for (const AccessProfile& p : profiles)
    if (p.name == name) return p;
  return std::nullopt;
}

std::vector<AccessProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("profile file: ") + e.what());
  }
  if (!doc.contains("profiles") || !doc["profiles"].is_array())
    throw ParseError(0, "profile file: missing 'profiles' array");

  std::vector<AccessProfile> out;
  for (const auto& j : doc["profiles"]) {
    try {
      AccessProfile p;
      p.name = j.at("name").get<std::string>();
      p.grid_factor_min = j.at("grid_factor_min").get<double>();
      p.grid_factor_max = j.at("grid_factor_max").get<double>();
      p.min_window_multiple = j.at("min_window_multiple").get<double>();
      const auto& fp = j.at("find_path");
      if (fp.is_string()) {
        const std::string s = fp.get<std::string>();
        if (s == "allowed")
          p.find_path = FindPathPolicy::allowed;
        else if (s == "forbidden")
          p.find_path = FindPathPolicy::forbidden;
        else
          throw ParseError(0, "profile '" + p.name + "': unknown find_path '" + s + "'");
      } else {
        p.find_path = FindPathPolicy::min_age;
        p.find_path_min_age_s = fp.at("min_age_seconds").get<double>();
      }
      if (p.grid_factor_min > p.grid_factor_max)
        throw ParseError(0, "profile '" + p.name + "': grid factor range inverted");
      if (p.min_window_multiple < 0)
        throw ParseError(0, "profile '" + p.name + "': negative min_window_multiple");
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("profile file: ") + e.what());
    }
  }
  return out;
}

void write_profiles(std::span<const AccessProfile> profiles, std::ostream& out) {
  nlohmann::json doc;
  doc["profiles"] = nlohmann::json::array();
  for (const AccessProfile& p : profiles) {
    nlohmann::json j;
    j["name"] = p.name;
    j["grid_factor_min"] = p.grid_factor_min;
    j["grid_factor_max"] = p.grid_factor_max;
    j["min_window_multiple"] = p.min_window_multiple;
    switch (p.find_path) {
      case FindPathPolicy::allowed: j["find_path"] = "allowed"; break;
      case FindPathPolicy::forbidden: j["find_path"] = "forbidden"; break;
      case FindPathPolicy::min_age: j["find_path"] = {{"min_age_seconds", p.find_path_min_age_s}}; break;
    }
    doc["profiles"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

SanitizedQuery sanitize_window_query(const AccessProfile& profile, const QueryWindow& win,
                                     const ConfigOverrides& overrides, const PacoConfig& base) {
  SanitizedQuery out{win, overrides};
  const double effective = overrides.grid_factor.value_or(base.grid_factor);
  out.overrides.grid_factor = std::clamp(effective, profile.grid_factor_min,
                                         profile.grid_factor_max);

  if (profile.min_window_multiple > 0.0) {
    const double m = profile.min_window_multiple;
    if (win.space) {
      const double required = m * base.space_range_m;
      const double center_lat = (win.space->min.lat + win.space->max.lat) / 2.0;
      const double lon_span_m = (win.space->max.lon - win.space->min.lon) * kMetersPerDegree *
                                std::cos(radians(center_lat));
      const double lat_span_m = (win.space->max.lat - win.space->min.lat) * kMetersPerDegree;
      if (lon_span_m < required) throw WindowTooSmallError(Axis::lon, required, lon_span_m);
      if (lat_span_m < required) throw WindowTooSmallError(Axis::lat, required, lat_span_m);
    }
    if (win.time) {
      const double required = m * base.time_range_s;
      const double span = win.time->hi - win.time->lo;
      if (span < required) throw WindowTooSmallError(Axis::time, required, span);
    }
  }
  return out;
}

void sanitize_find_path(const AccessProfile& profile, const QueryPoint& a, const QueryPoint& b,
                        double now_s) {
  switch (profile.find_path) {
    case FindPathPolicy::allowed: return;
    case FindPathPolicy::forbidden: throw FindPathForbiddenError();
    case FindPathPolicy::min_age: {
      const double newest_allowed = now_s - profile.find_path_min_age_s;
      if (std::max(a.t, b.t) > newest_allowed) throw FindPathTooRecentError(newest_allowed);
      return;
    }
  }
}

}  // namespace paco
