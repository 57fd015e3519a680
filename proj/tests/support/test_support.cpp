#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "paco/geo.hpp"

namespace paco::test {

GeoCoord random_coord(SeededRng& rng, const GeoBox& box) {
  return {rng.uniform(box.min.lon, box.max.lon), rng.uniform(box.min.lat, box.max.lat)};
}

std::vector<ContextPoint> random_points(SeededRng& rng, const Region& region, std::size_t n) {
  std::vector<ContextPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GeoCoord c = random_coord(rng, region.space);
    const auto t = region.t_lo + static_cast<std::int64_t>(
                                     rng.below(static_cast<std::uint64_t>(
                                         region.t_hi - region.t_lo + 1)));
    out.push_back({c.lon, c.lat, t, i});
  }
  return out;
}

StBox random_box(SeededRng& rng, const Region& region) {
  const GeoCoord a = random_coord(rng, region.space);
  const GeoCoord b = random_coord(rng, region.space);
  const double t1 = rng.uniform(static_cast<double>(region.t_lo), static_cast<double>(region.t_hi));
  const double t2 = rng.uniform(static_cast<double>(region.t_lo), static_cast<double>(region.t_hi));
  StBox box;
  box.space = {{std::min(a.lon, b.lon), std::min(a.lat, b.lat)},
               {std::max(a.lon, b.lon), std::max(a.lat, b.lat)}};
  box.time = {std::min(t1, t2), std::max(t1, t2)};
  return box;
}

std::vector<TraceRecord> make_cab_trace(std::uint64_t seed, std::size_t n) {
  SeededRng rng(seed);

  // Hotspots scattered over roughly 12 x 12 km around central SF.
  const GeoCoord city_center{-122.42, 37.765};
  const int n_hotspots = 8;
  std::vector<GeoCoord> hotspots;
  for (int i = 0; i < n_hotspots; ++i) {
    const double bearing = rng.uniform(0.0, 2.0 * kPi);
    const double dist = rng.uniform(500.0, 6000.0);
    hotspots.push_back(destination_point(city_center, bearing, dist));
  }

  std::vector<TraceRecord> out;
  out.reserve(n);
  std::int64_t t = 1213000000;  // arbitrary epoch base
  GeoCoord pos = hotspots[0];
  std::size_t target = 1;
  enum class Mode { driving, dwelling };
  Mode mode = Mode::dwelling;
  std::int64_t dwell_left = 300;

  while (out.size() < n) {
    out.push_back({pos.lat, pos.lon, t, "cab"});
    const std::int64_t dt = 30 + static_cast<std::int64_t>(rng.below(61));  // 30..90 s
    t += dt;
    if (mode == Mode::dwelling) {
      dwell_left -= dt;
      // GPS jitter around the stand.
      pos = destination_point(pos, rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 25.0));
      if (dwell_left <= 0) {
        mode = Mode::driving;
        target = rng.below(n_hotspots);
      }
    } else {
      const GeoCoord dest = hotspots[target];
      const double remaining = haversine_distance(pos, dest);
      const double speed = rng.uniform(6.0, 14.0);  // m/s
      const double step = speed * static_cast<double>(dt);
      if (step >= remaining) {
        pos = dest;
        mode = Mode::dwelling;
        dwell_left = 300 + static_cast<std::int64_t>(rng.below(1500));  // 5..30 min
      } else {
        // Head for the destination with a little wander.
        const double dy = dest.lat - pos.lat;
        const double dx = (dest.lon - pos.lon) * std::cos(radians(pos.lat));
        const double bearing = std::atan2(dx, dy) + rng.uniform(-0.2, 0.2);
        pos = destination_point(pos, bearing, step);
      }
    }
  }
  return out;
}

std::string cab_trace_text(std::span<const TraceRecord> records) {
  std::string out;
  char buf[96];
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    std::snprintf(buf, sizeof(buf), "%.5f %.5f %d %lld\n", it->lat, it->lon,
                  static_cast<int>(it - records.rbegin()) % 2, static_cast<long long>(it->t));
    out += buf;
  }
  return out;
}

std::vector<ContextPoint> oracle_range(std::span<const ContextPoint> pts, const StBox& box) {
  std::vector<ContextPoint> out;
  for (const ContextPoint& p : pts) {
    const bool in_space = p.x >= box.space.min.lon && p.x <= box.space.max.lon &&
                          p.y >= box.space.min.lat && p.y <= box.space.max.lat;
    const bool in_time = static_cast<double>(p.t) >= box.time.lo &&
                         static_cast<double>(p.t) <= box.time.hi;
    if (in_space && in_time) out.push_back(p);
  }
  return out;
}

std::optional<ContextPoint> oracle_nearest(std::span<const ContextPoint> pts, const QueryPoint& q,
                                           const PacoConfig& cfg) {
  std::optional<ContextPoint> best;
  double best_d = 0.0;
  for (const ContextPoint& p : pts) {
    const double ds = haversine_distance({p.x, p.y}, {q.lon, q.lat}) / cfg.space_range_m;
    const double dt = std::fabs(static_cast<double>(p.t) - q.t) / cfg.time_range_s;
    const double d = std::sqrt(ds * ds + dt * dt);
    if (!best || d < best_d || (d == best_d && p.id < best->id)) {
      best = p;
      best_d = d;
    }
  }
  return best;
}

std::vector<ContextPoint> oracle_sequence(std::span<const ContextPoint> pts,
                                          const ContextPoint& a, const ContextPoint& b) {
  if (a == b) return {a};
  const std::int64_t lo = std::min(a.t, b.t), hi = std::max(a.t, b.t);
  std::vector<ContextPoint> out;
  for (const ContextPoint& p : pts)
    if (p.t >= lo && p.t <= hi) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const ContextPoint& l, const ContextPoint& r) {
    if (l.t != r.t) return l.t < r.t;
    return l.id < r.id;
  });
  const bool a_first = a.t < b.t || (a.t == b.t && a.id < b.id);
  const ContextPoint first = a_first ? a : b;
  const ContextPoint last = a_first ? b : a;
  auto it = std::find(out.begin(), out.end(), first);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  auto jt = std::find(out.begin(), out.end(), last);
  if (jt != out.end()) std::rotate(jt, jt + 1, out.end());
  return out;
}

double oracle_union_expansion(std::span<const double> poks) {
  const std::size_t n = poks.size();
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double prod = 1.0;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prod *= poks[i];
        ++bits;
      }
    }
    total += (bits % 2 == 1) ? prod : -prod;
  }
  return total;
}

OracleWindowResult oracle_window_pok(std::span<const ContextPoint> pts, const StBox& window,
                                     const PacoConfig& cfg) {
  // Grid decomposition, retyped from the documented rule.
  const double center_lat = (window.space.min.lat + window.space.max.lat) / 2.0;
  const double cos_lat = std::max(std::cos(radians(center_lat)), 1e-12);
  const double edge_m = cfg.space_range_m / cfg.grid_factor;
  const double lat_edge = edge_m / kMetersPerDegree;
  const double lon_edge = edge_m / (kMetersPerDegree * cos_lat);
  const double t_edge = cfg.time_range_s / cfg.grid_factor;
  auto cells = [](double span, double edge) {
    return std::max(1, static_cast<int>(std::ceil(span / edge - 1e-9)));
  };
  const int nx = cells(window.space.max.lon - window.space.min.lon, lon_edge);
  const int ny = cells(window.space.max.lat - window.space.min.lat, lat_edge);
  const int nt = cells(window.time.hi - window.time.lo, t_edge);

  double t_o = 0.0;
  for (int it = 0; it < nt; ++it) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const double lon_lo = window.space.min.lon + ix * lon_edge;
        const double lon_hi = std::min(lon_lo + lon_edge, window.space.max.lon);
        const double lat_lo = window.space.min.lat + iy * lat_edge;
        const double lat_hi = std::min(lat_lo + lat_edge, window.space.max.lat);
        const double tc_lo = window.time.lo + it * t_edge;
        const double tc_hi = std::min(tc_lo + t_edge, window.time.hi);
        const double tx = (lon_lo + lon_hi) / 2.0;
        const double ty = (lat_lo + lat_hi) / 2.0;
        const double tt = (tc_lo + tc_hi) / 2.0;

        // Influence of every stored point on the target, no pre-query.
        std::vector<std::pair<double, std::uint64_t>> vals;
        for (const ContextPoint& p : pts) {
          const double d = haversine_distance({p.x, p.y}, {tx, ty});
          const double is = std::max(0.0, 1.0 - d / cfg.space_range_m) * cfg.space_weight;
          const double itv =
              std::max(0.0, 1.0 - std::fabs(static_cast<double>(p.t) - tt) / cfg.time_range_s) *
              cfg.time_weight;
          const double v = is * itv;
          if (v > 0.0) vals.emplace_back(v, p.id);
        }
        std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first > b.first;
          return a.second < b.second;
        });
        if (vals.size() > static_cast<std::size_t>(cfg.trim_thresh))
          vals.resize(static_cast<std::size_t>(cfg.trim_thresh));
        std::vector<double> kept;
        kept.reserve(vals.size());
        for (const auto& [v, id] : vals) kept.push_back(v);
        t_o += oracle_union_expansion(kept);
      }
    }
  }
  OracleWindowResult r;
  r.t_o = t_o;
  r.t_p = static_cast<double>(nx) * ny * nt;
  r.pok = t_o / r.t_p;
  return r;
}

}  // namespace paco::test
