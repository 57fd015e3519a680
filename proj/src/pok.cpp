#include "paco/pok.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "paco/errors.hpp"

namespace paco {

double influence_spatial(double distance_m, const PacoConfig& cfg) {
  return std::max(0.0, 1.0 - distance_m / cfg.space_range_m);
}

double influence_temporal(double dt_s, const PacoConfig& cfg) {
  return std::max(0.0, 1.0 - dt_s / cfg.time_range_s);
}

double pok_point(const QueryPoint& p, const QueryPoint& r, const PacoConfig& cfg) {
  const double d = haversine_distance({p.lon, p.lat}, {r.lon, r.lat});
  const double is = influence_spatial(d, cfg) * cfg.space_weight;
  const double it = influence_temporal(std::fabs(p.t - r.t), cfg) * cfg.time_weight;
  return is * it;
}

double pok_point(const ContextPoint& p, const QueryPoint& r, const PacoConfig& cfg) {
  return pok_point(to_query_point(p), r, cfg);
}

double pok_union(std::span<const double> poks) {
  double miss = 1.0;
  for (const double p : poks) miss *= 1.0 - p;
  return 1.0 - miss;
}

double pok_union_inclusion_exclusion(std::span<const double> poks) {
  const std::size_t n = poks.size();
  if (n == 0) return 0.0;
  if (n > 25) throw ConfigError("inclusion-exclusion expansion limited to 25 terms");
  double total = 0.0;
  const std::uint32_t limit = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= poks[i];
    total += (std::popcount(mask) % 2 == 1) ? prod : -prod;
  }
  return std::clamp(total, 0.0, 1.0);
}

double subcube_pok(const QueryPoint& target, std::span<const ContextPoint> candidates,
                   const PacoConfig& cfg) {
  std::vector<std::pair<double, std::uint64_t>> vals;
  vals.reserve(candidates.size());
  for (const ContextPoint& c : candidates) {
    const double v = pok_point(c, target, cfg);
    if (v > 0.0) vals.emplace_back(v, c.id);
  }
  std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (vals.size() > static_cast<std::size_t>(cfg.trim_thresh))
    vals.resize(static_cast<std::size_t>(cfg.trim_thresh));
  double miss = 1.0;
  for (const auto& [v, id] : vals) miss *= 1.0 - v;
  return 1.0 - miss;
}

namespace {

// Sub-cube counts tolerate a ulp of slop so that windows constructed as
// exact multiples of the edge length land on the intended count.
int cell_count(double span, double edge) {
  if (!(edge > 0.0)) return 1;
  const double r = span / edge;
  const int n = static_cast<int>(std::ceil(r - 1e-9));
  return std::max(1, n);
}

// Influence reach plus a sliver: covers rounding at the range boundary,
// where influence is zero anyway.
double padded_range(double range) { return range * (1.0 + 1e-9) + 1e-6; }

}  // namespace

QueryPoint WindowGrid::cell_target(int ix, int iy, int it) const {
  const double lon_lo = bounds.space.min.lon + ix * lon_edge_deg;
  const double lon_hi = std::min(lon_lo + lon_edge_deg, bounds.space.max.lon);
  const double lat_lo = bounds.space.min.lat + iy * lat_edge_deg;
  const double lat_hi = std::min(lat_lo + lat_edge_deg, bounds.space.max.lat);
  const double t_lo = bounds.time.lo + it * t_edge_s;
  const double t_hi = std::min(t_lo + t_edge_s, bounds.time.hi);
  return {(lon_lo + lon_hi) / 2.0, (lat_lo + lat_hi) / 2.0, (t_lo + t_hi) / 2.0};
}

WindowGrid decompose_window(const StBox& bounds, const PacoConfig& cfg) {
  WindowGrid g;
  g.bounds = bounds;
  const double center_lat = (bounds.space.min.lat + bounds.space.max.lat) / 2.0;
  const double cos_lat = std::max(std::cos(radians(center_lat)), 1e-12);
  const double edge_m = cfg.space_range_m / cfg.grid_factor;
  g.lat_edge_deg = edge_m / kMetersPerDegree;
  g.lon_edge_deg = edge_m / (kMetersPerDegree * cos_lat);
  g.t_edge_s = cfg.time_range_s / cfg.grid_factor;
  g.nx = cell_count(bounds.space.max.lon - bounds.space.min.lon, g.lon_edge_deg);
  g.ny = cell_count(bounds.space.max.lat - bounds.space.min.lat, g.lat_edge_deg);
  g.nt = cell_count(bounds.time.hi - bounds.time.lo, g.t_edge_s);
  if (g.cell_count() > (1u << 26))
    throw WindowError("window decomposes into too many sub-cubes");
  return g;
}

StBox clamp_window(const QueryWindow& win, const StoreBackend& store) {
  if (!win.space && !win.time) throw WindowError("window must bound space or time");
  std::optional<StBox> ext;
  if (!win.space || !win.time) {
    ext = store.extent();
    if (!ext) throw WindowError("cannot clamp an unbounded window axis on an empty store");
  }
  StBox out;
  out.space = win.space ? *win.space : ext->space;
  out.time = win.time ? *win.time : ext->time;
  if (!valid_box(out.space)) throw WindowError("invalid window box");
  if (out.time.lo > out.time.hi) throw WindowError("invalid window time interval");
  return out;
}

StBox influence_box(const QueryPoint& target, const PacoConfig& cfg) {
  StBox b;
  b.space = expand_box({target.lon, target.lat}, padded_range(cfg.space_range_m));
  const double tr = padded_range(cfg.time_range_s);
  b.time = {target.t - tr, target.t + tr};
  return b;
}

WindowEval evaluate_window(const QueryWindow& win, const StoreBackend& store,
                           const PacoConfig& cfg, RefMode mode) {
  cfg.validate();
  WindowEval ev;
  const StBox w = clamp_window(win, store);
  ev.grid = decompose_window(w, cfg);

  // Expanded pre-query: inflate by one padded Range per axis. The
  // longitude pad is taken at the window's worst-case latitude so the
  // reach of every cell target is covered.
  const double sr = padded_range(cfg.space_range_m);
  const double tr = padded_range(cfg.time_range_s);
  const double worst_lat = std::max(std::fabs(w.space.min.lat), std::fabs(w.space.max.lat));
  const double lon_pad = lon_halfspan_deg(sr, worst_lat);
  const double lat_pad = degrees(sr / kEarthRadiusM);
  StBox pre;
  pre.space.min = {std::max(-180.0, w.space.min.lon - lon_pad),
                   std::max(-90.0, w.space.min.lat - lat_pad)};
  pre.space.max = {std::min(180.0, w.space.max.lon + lon_pad),
                   std::min(90.0, w.space.max.lat + lat_pad)};
  pre.time = {w.time.lo - tr, w.time.hi + tr};

  std::vector<ContextPoint> ref = store.range_query(pre);
  ev.result.n_candidates = ref.size();

  RefTree tree;
  if (mode == RefMode::kd_tree) tree = RefTree::build(ref, cfg);

  ev.cell_pok.resize(ev.grid.cell_count());
  double t_o = 0.0;
  for (int it = 0; it < ev.grid.nt; ++it) {
    for (int iy = 0; iy < ev.grid.ny; ++iy) {
      for (int ix = 0; ix < ev.grid.nx; ++ix) {
        const QueryPoint target = ev.grid.cell_target(ix, iy, it);
        const StBox cell_box = influence_box(target, cfg);
        std::vector<ContextPoint> cands;
        if (mode == RefMode::kd_tree) {
          cands = tree.range(cell_box);
        } else {
          for (const ContextPoint& p : ref)
            if (cell_box.contains(p)) cands.push_back(p);
        }
        const double pok = subcube_pok(target, cands, cfg);
        ev.cell_pok[ev.grid.cell_index(ix, iy, it)] = pok;
        t_o += pok;
      }
    }
  }
  ev.result.t_o = t_o;
  ev.result.t_p = static_cast<double>(ev.grid.cell_count());
  ev.result.n_subcubes = ev.grid.cell_count();
  ev.result.pok = t_o / ev.result.t_p;
  return ev;
}

PoKResult window_pok(const QueryWindow& win, const StoreBackend& store, const PacoConfig& cfg,
                     RefMode mode) {
  return evaluate_window(win, store, cfg, mode).result;
}

}  // namespace paco
