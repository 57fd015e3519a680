#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "paco/geo.hpp"
#include "paco/types.hpp"

namespace paco {

/// One trace sample before it becomes a stored point.
struct TraceRecord {
  double lat = 0.0;
  double lon = 0.0;
  std::int64_t t = 0;
  std::string source_tag;
};

inline bool operator==(const TraceRecord& a, const TraceRecord& b) {
  return a.lat == b.lat && a.lon == b.lon && a.t == b.t && a.source_tag == b.source_tag;
}

enum class TraceFormat { cab, csv };

/// Cab archive lines: `lat lon occupancy unix_time`, whitespace
/// separated; the files arrive newest-first and the occupancy flag is
/// dropped. Output is sorted ascending by time (stable), which smart
/// insert's chronological replay requires.
std::vector<TraceRecord> parse_cab_trace(std::istream& in, std::string_view tag = "cab");

/// CSV with header `lat,lon,t`; same normalization as the cab parser.
std::vector<TraceRecord> parse_csv_trace(std::istream& in, std::string_view tag = "csv");

std::vector<TraceRecord> load_trace(const std::filesystem::path& path, TraceFormat format);

/// Bit-stable CSV: records sorted by time, coordinates at fixed 7
/// decimal digits.
void export_csv_trace(std::span<const TraceRecord> records, std::ostream& out);

/// Deterministic random walk: first record sits at `origin` with t = 0,
/// each step turns uniformly, covers a uniform length in [0, step_m] and
/// advances time by exactly step_t_s. Identical seeds give identical
/// output.
std::vector<TraceRecord> synthetic_walk(std::uint64_t seed, std::size_t n, double step_m,
                                        std::int64_t step_t_s, GeoCoord origin);

/// Store points from a time-sorted trace; ids are assigned sequentially
/// in time order starting at 0.
std::vector<ContextPoint> to_points(std::span<const TraceRecord> records);

}  // namespace paco
