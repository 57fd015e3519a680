#include "paco/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "paco/errors.hpp"
#include "paco/rng.hpp"

namespace paco {

namespace {

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

void check_record(TraceRecord& r, std::size_t line) {
  if (r.lat < -90.0 || r.lat > 90.0) throw ParseError(line, "latitude out of range");
  if (r.lon < -180.0 || r.lon > 180.0) throw ParseError(line, "longitude out of range");
  r.lon = normalize_lon(r.lon);
  if (r.t < 0) throw ParseError(line, "negative timestamp");
}

void sort_by_time(std::vector<TraceRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const TraceRecord& a, const TraceRecord& b) { return a.t < b.t; });
}

}  // namespace

std::vector<TraceRecord> parse_cab_trace(std::istream& in, std::string_view tag) {
  std::vector<TraceRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string lat, lon, occupancy, t, extra;
    if (!(fields >> lat >> lon >> occupancy >> t) || (fields >> extra))
      throw ParseError(lineno, "expected 4 fields 'lat lon occupancy time'");
    TraceRecord r;
    r.lat = parse_number<double>(lat, lineno, "latitude");
    r.lon = parse_number<double>(lon, lineno, "longitude");
    parse_number<int>(occupancy, lineno, "occupancy");
    r.t = parse_number<std::int64_t>(t, lineno, "time");
    r.source_tag = tag;
    check_record(r, lineno);
    out.push_back(std::move(r));
  }
  sort_by_time(out);
  return out;
}

std::vector<TraceRecord> parse_csv_trace(std::istream& in, std::string_view tag) {
  std::vector<TraceRecord> out;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) return out;  // empty file: no records
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "lat,lon,t") throw ParseError(1, "expected header 'lat,lon,t'");

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos)
      throw ParseError(lineno, "expected 3 fields lat,lon,t");
    TraceRecord r;
    r.lat = parse_number<double>(std::string_view(line).substr(0, c1), lineno, "latitude");
    r.lon = parse_number<double>(std::string_view(line).substr(c1 + 1, c2 - c1 - 1), lineno,
                                 "longitude");
    r.t = parse_number<std::int64_t>(std::string_view(line).substr(c2 + 1), lineno, "time");
    r.source_tag = tag;
    check_record(r, lineno);
    out.push_back(std::move(r));
  }
  sort_by_time(out);
  return out;
}

std::vector<TraceRecord> load_trace(const std::filesystem::path& path, TraceFormat format) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  return format == TraceFormat::cab ? parse_cab_trace(f) : parse_csv_trace(f);
}

void export_csv_trace(std::span<const TraceRecord> records, std::ostream& out) {
  std::vector<TraceRecord> sorted(records.begin(), records.end());
  sort_by_time(sorted);
  out << "lat,lon,t\n";
  char buf[96];
  for (const TraceRecord& r : sorted) {
    std::snprintf(buf, sizeof(buf), "%.7f,%.7f,%lld\n", r.lat, r.lon,
                  static_cast<long long>(r.t));
    out << buf;
  }
}

std::vector<TraceRecord> synthetic_walk(std::uint64_t seed, std::size_t n, double step_m,
                                        std::int64_t step_t_s, GeoCoord origin) {
  std::vector<TraceRecord> out;
  if (n == 0) return out;
  SeededRng rng(seed);
  GeoCoord pos = origin;
  std::int64_t t = 0;
  out.push_back({pos.lat, pos.lon, t, "synthetic"});
  for (std::size_t i = 1; i < n; ++i) {
    const double bearing = rng.uniform(0.0, 2.0 * kPi);
    const double length = rng.uniform(0.0, step_m);
    pos = destination_point(pos, bearing, length);
    t += step_t_s;
    out.push_back({pos.lat, pos.lon, t, "synthetic"});
  }
  return out;
}

std::vector<ContextPoint> to_points(std::span<const TraceRecord> records) {
  std::vector<ContextPoint> out;
  out.reserve(records.size());
  std::uint64_t id = 0;
  for (const TraceRecord& r : records) out.push_back({r.lon, r.lat, r.t, id++});
  return out;
}

}  // namespace paco
