#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paco/config.hpp"
#include "paco/errors.hpp"
#include "paco/pok.hpp"

namespace paco {

enum class FindPathPolicy { allowed, min_age, forbidden };

/// Per-client release policy: clamps query granularity, enforces a
/// minimum window size, and gates path queries on endpoint age.
/// Profiles are plain data; the three built-ins mirror the open /
/// guarded / restricted postures and custom ones load from config.
struct AccessProfile {
  std::string name;
  double grid_factor_min = 0.5;
  double grid_factor_max = 2.0;
  /// Minimum bounded-axis span as a multiple of that axis's Range;
  /// 0 disables the check.
  double min_window_multiple = 0.0;
  FindPathPolicy find_path = FindPathPolicy::allowed;
  double find_path_min_age_s = 0.0;  // only read when find_path == min_age
};

const AccessProfile& open_profile();
const AccessProfile& guarded_profile();
const AccessProfile& restricted_profile();
std::vector<AccessProfile> builtin_profiles();

std::optional<AccessProfile> find_profile(std::span<const AccessProfile> profiles,
                                          std::string_view name);

/// JSON profile file: {"profiles": [{"name": ..., "grid_factor_min": ...,
/// "grid_factor_max": ..., "min_window_multiple": ..., "find_path":
/// "allowed" | "forbidden" | {"min_age_seconds": N}}, ...]}.
std::vector<AccessProfile> load_profiles(const std::filesystem::path& path);
void write_profiles(std::span<const AccessProfile> profiles, std::ostream& out);

struct SanitizedQuery {
  QueryWindow window;
  ConfigOverrides overrides;
};

inline bool operator==(const SanitizedQuery& a, const SanitizedQuery& b) {
  return a.window == b.window && a.overrides == b.overrides;
}

/// Clamps the effective grid factor into the profile's range and rejects
/// (never silently enlarges) windows whose bounded axes span less than
/// min_window_multiple times the axis Range. Throws WindowTooSmallError.
SanitizedQuery sanitize_window_query(const AccessProfile& profile, const QueryWindow& win,
                                     const ConfigOverrides& overrides, const PacoConfig& base);

/// Passes, or throws FindPathForbiddenError / FindPathTooRecentError.
/// Both endpoints must satisfy the age gate: a single recent endpoint
/// already reveals recent movement.
void sanitize_find_path(const AccessProfile& profile, const QueryPoint& a, const QueryPoint& b,
                        double now_s);

}  // namespace paco
