#pragma once

#include <optional>
#include <span>
#include <vector>

#include "paco/config.hpp"
#include "paco/ref_tree.hpp"
#include "paco/store.hpp"
#include "paco/types.hpp"

namespace paco {

/// Query region for a window PoK computation. Either axis group may be
/// left unbounded, but not both; unbounded axes are clamped to the
/// store's data extent before decomposition.
struct QueryWindow {
  std::optional<GeoBox> space;
  std::optional<TimeInterval> time;
};

inline bool operator==(const QueryWindow& a, const QueryWindow& b) {
  auto eq_box = [](const std::optional<GeoBox>& x, const std::optional<GeoBox>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->min == y->min && x->max == y->max;
  };
  auto eq_time = [](const std::optional<TimeInterval>& x, const std::optional<TimeInterval>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->lo == y->lo && x->hi == y->hi;
  };
  return eq_box(a.space, b.space) && eq_time(a.time, b.time);
}

struct PoKResult {
  double pok = 0.0;  // t_o / t_p
  double t_o = 0.0;  // sum of sub-cube PoKs
  double t_p = 0.0;  // number of sub-cubes (maximum possible PoK)
  std::size_t n_candidates = 0;  // reference-set size from the expanded pre-query
  std::size_t n_subcubes = 0;
};

/// Linear influence, amplitude 1, zero at the configured range:
/// max(0, 1 - d / range).
double influence_spatial(double distance_m, const PacoConfig& cfg);
double influence_temporal(double dt_s, const PacoConfig& cfg);

/// Influence of point p on reference point r:
/// (I_s(haversine) * SpaceWeight) * (I_t(|dt|) * TimeWeight).
/// The two spatial deltas combine into the single great-circle distance,
/// so influence decays radially.
double pok_point(const QueryPoint& p, const QueryPoint& r, const PacoConfig& cfg);
double pok_point(const ContextPoint& p, const QueryPoint& r, const PacoConfig& cfg);

/// Union of independent influences, closed form 1 - prod(1 - p_i). This
/// is the production path.
double pok_union(std::span<const double> poks);

/// The same union by explicit inclusion-exclusion over all 2^n - 1
/// non-empty subsets, each intersection the product of its members.
/// Exponential; intended for cross-checks with small n (n <= 25).
double pok_union_inclusion_exclusion(std::span<const double> poks);

/// Per-candidate PoK against `target`, zeros dropped, sorted descending
/// (ties by ascending id), trimmed to trim_thresh, then unioned.
double subcube_pok(const QueryPoint& target, std::span<const ContextPoint> candidates,
                   const PacoConfig& cfg);

/// Window decomposition: sub-cube edges are SpaceRange/GridFactor meters
/// (converted to degrees at the window's center latitude) and
/// TimeRange/GridFactor seconds. Partial boundary cells are kept and
/// carry full weight; targets are the clipped cell midpoints.
struct WindowGrid {
  StBox bounds;
  int nx = 1, ny = 1, nt = 1;
  double lon_edge_deg = 0.0, lat_edge_deg = 0.0, t_edge_s = 0.0;

  std::size_t cell_count() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nt);
  }
  QueryPoint cell_target(int ix, int iy, int it) const;
  std::size_t cell_index(int ix, int iy, int it) const {
    return (static_cast<std::size_t>(it) * ny + iy) * nx + ix;
  }
};

WindowGrid decompose_window(const StBox& bounds, const PacoConfig& cfg);

/// Resolves unbounded axes against the store's extent. Throws
/// WindowError when both axes are unbounded or the store is empty while
/// an axis is unbounded.
StBox clamp_window(const QueryWindow& win, const StoreBackend& store);

/// How per-sub-cube candidates are fetched from the reference set; both
/// modes produce bit-identical results.
enum class RefMode { kd_tree, linear_scan };

struct WindowEval {
  PoKResult result;
  WindowGrid grid;
  std::vector<double> cell_pok;  // indexed by WindowGrid::cell_index
};

/// Full window computation: clamp, decompose, one expanded pre-query on
/// the store (window inflated by one Range per axis so every influencing
/// point is captured), reference set into a RefTree (or scanned
/// linearly), then one subcube_pok per cell, summed in fixed cell order.
WindowEval evaluate_window(const QueryWindow& win, const StoreBackend& store,
                           const PacoConfig& cfg, RefMode mode = RefMode::kd_tree);

PoKResult window_pok(const QueryWindow& win, const StoreBackend& store, const PacoConfig& cfg,
                     RefMode mode = RefMode::kd_tree);

/// Influence-reach box around a target: every point with nonzero
/// influence on `target` lies inside (a hair of slack absorbs rounding).
StBox influence_box(const QueryPoint& target, const PacoConfig& cfg);

}  // namespace paco
