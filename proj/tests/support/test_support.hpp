#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paco/config.hpp"
#include "paco/ingest.hpp"
#include "paco/rng.hpp"
#include "paco/types.hpp"

namespace paco::test {

// ---- generators -----------------------------------------------------

struct Region {
  GeoBox space;
  std::int64_t t_lo = 0;
  std::int64_t t_hi = 0;
};

GeoCoord random_coord(SeededRng& rng, const GeoBox& box);
std::vector<ContextPoint> random_points(SeededRng& rng, const Region& region, std::size_t n);
StBox random_box(SeededRng& rng, const Region& region);

/// Deterministic taxi-like mobility trace: vehicles shuttle between a
/// handful of hotspots inside an SF-sized box, sampling roughly once a
/// minute, dwelling at stands between trips. Dense revisits make it a
/// workable stand-in for a cab archive slice.
std::vector<TraceRecord> make_cab_trace(std::uint64_t seed, std::size_t n);

/// The same trace in cab file format (lat lon occupancy time), emitted
/// newest-first like the real archives.
std::string cab_trace_text(std::span<const TraceRecord> records);

// ---- independent oracles ---------------------------------------------

std::vector<ContextPoint> oracle_range(std::span<const ContextPoint> pts, const StBox& box);

std::optional<ContextPoint> oracle_nearest(std::span<const ContextPoint> pts, const QueryPoint& q,
                                           const PacoConfig& cfg);

std::vector<ContextPoint> oracle_sequence(std::span<const ContextPoint> pts,
                                          const ContextPoint& a, const ContextPoint& b);

/// Explicit inclusion-exclusion union over all non-empty subsets,
/// intersections as products.
double oracle_union_expansion(std::span<const double> poks);

struct OracleWindowResult {
  double pok = 0.0;
  double t_o = 0.0;
  double t_p = 0.0;
};

/// Brute-force window PoK: recomputes the grid decomposition from the
/// documented rule, then evaluates every cell against a full linear scan
/// of the point set (influence filter, sort, trim, explicit expansion).
OracleWindowResult oracle_window_pok(std::span<const ContextPoint> pts, const StBox& window,
                                     const PacoConfig& cfg);

}  // namespace paco::test
