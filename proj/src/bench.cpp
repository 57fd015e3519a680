#include "paco/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "paco/store_io.hpp"

namespace paco {

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  char buf[64];
  for (const BenchRow& r : rows) {
    out << r.suite << ',' << r.config << ',' << r.kept << ',' << r.total << ',' << r.bytes << ',';
    std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%.3f", r.mean_pok, r.pok_retention, r.median_ms);
    out << buf << '\n';
  }
}

ReplayStats replay_trace(Paco& paco, std::span<const ContextPoint> trace) {
  ReplayStats s;
  s.total = trace.size();
  for (const ContextPoint& p : trace)
    if (paco.smart_insert(p).inserted) ++s.kept;
  return s;
}

StBox trace_bounding_box(std::span<const ContextPoint> trace) {
  if (trace.empty()) throw Error("empty trace has no bounding box");
  StBox b{{{trace[0].x, trace[0].y}, {trace[0].x, trace[0].y}},
          {static_cast<double>(trace[0].t), static_cast<double>(trace[0].t)}};
  for (const ContextPoint& p : trace) {
    b.space.min.lon = std::min(b.space.min.lon, p.x);
    b.space.max.lon = std::max(b.space.max.lon, p.x);
    b.space.min.lat = std::min(b.space.min.lat, p.y);
    b.space.max.lat = std::max(b.space.max.lat, p.y);
    b.time.lo = std::min(b.time.lo, static_cast<double>(p.t));
    b.time.hi = std::max(b.time.hi, static_cast<double>(p.t));
  }
  return b;
}

double mean_window_pok_over_tiles(const StoreBackend& store, const PacoConfig& cfg,
                                  const StBox& bbox, const EvalProtocol& proto) {
  const double center_lat = (bbox.space.min.lat + bbox.space.max.lat) / 2.0;
  const double cos_lat = std::max(std::cos(radians(center_lat)), 1e-12);
  const double lat_edge = cfg.space_range_m / kMetersPerDegree;
  const double lon_edge = cfg.space_range_m / (kMetersPerDegree * cos_lat);
  const double t_edge = cfg.time_range_s;

  auto tiles = [](double span, double edge) {
    return std::max(1, static_cast<int>(std::ceil(span / edge - 1e-9)));
  };
  const int nx = tiles(bbox.space.max.lon - bbox.space.min.lon, lon_edge);
  const int ny = tiles(bbox.space.max.lat - bbox.space.min.lat, lat_edge);
  const int nt = tiles(bbox.time.hi - bbox.time.lo, t_edge);

  auto stride = [&](int n) {
    return std::max(1, (n + proto.max_tiles_per_axis - 1) / proto.max_tiles_per_axis);
  };
  const int sx = stride(nx), sy = stride(ny), st = stride(nt);

  double sum = 0.0;
  std::size_t count = 0;
  for (int it = 0; it < nt; it += st) {
    for (int iy = 0; iy < ny; iy += sy) {
      for (int ix = 0; ix < nx; ix += sx) {
        QueryWindow w;
        const double lon_lo = bbox.space.min.lon + ix * lon_edge;
        const double lat_lo = bbox.space.min.lat + iy * lat_edge;
        const double t_lo = bbox.time.lo + it * t_edge;
        w.space = GeoBox{{lon_lo, lat_lo},
                         {std::min(lon_lo + lon_edge, bbox.space.max.lon),
                          std::min(lat_lo + lat_edge, bbox.space.max.lat)}};
        w.time = TimeInterval{t_lo, std::min(t_lo + t_edge, bbox.time.hi)};
        sum += window_pok(w, store, cfg).pok;
        ++count;
      }
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double measure_median_ms(const std::function<void()>& fn, int warmups, int samples) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < warmups; ++i) fn();
  std::vector<double> ms;
  ms.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const auto t0 = clock::now();
    fn();
    const auto t1 = clock::now();
    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(ms.begin(), ms.end());
  return ms[ms.size() / 2];
}

QueryWindow default_bench_window(const StBox& bbox, const PacoConfig& cfg) {
  QueryWindow w;
  const GeoCoord center{(bbox.space.min.lon + bbox.space.max.lon) / 2.0,
                        (bbox.space.min.lat + bbox.space.max.lat) / 2.0};
  const double lat_half_m = (bbox.space.max.lat - bbox.space.min.lat) * kMetersPerDegree / 2.0;
  const double lon_half_m = (bbox.space.max.lon - bbox.space.min.lon) * kMetersPerDegree *
                            std::cos(radians(center.lat)) / 2.0;
  const double half = std::min(5.0 * cfg.space_range_m,
                               std::max({lat_half_m, lon_half_m, 0.5 * cfg.space_range_m}));
  w.space = expand_box(center, half);

  const double t_center = (bbox.time.lo + bbox.time.hi) / 2.0;
  const double t_half =
      std::min(1.4 * cfg.time_range_s,
               std::max((bbox.time.hi - bbox.time.lo) / 2.0, 0.5 * cfg.time_range_s));
  w.time = TimeInterval{t_center - t_half, t_center + t_half};
  return w;
}

namespace {

struct BuiltStore {
  std::unique_ptr<Paco> paco;
  ReplayStats stats;
};

BuiltStore build_full(std::span<const ContextPoint> trace, const PacoConfig& cfg,
                      BackendKind kind) {
  auto p = std::make_unique<Paco>(make_store(kind), cfg);
  for (const ContextPoint& pt : trace) p->insert(pt);
  return {std::move(p), {trace.size(), trace.size()}};
}

BuiltStore build_replayed(std::span<const ContextPoint> trace, PacoConfig cfg, BackendKind kind,
                          double ins_thresh) {
  cfg.ins_thresh = ins_thresh;
  auto p = std::make_unique<Paco>(make_store(kind), cfg);
  const ReplayStats st = replay_trace(*p, trace);
  return {std::move(p), st};
}

std::size_t store_bytes(const Paco& p) { return serialize_store(p.store()).size(); }

}  // namespace

std::vector<BenchRow> bench_insthresh_sweep(std::span<const ContextPoint> trace,
                                            const PacoConfig& base,
                                            std::span<const double> thresholds) {
  std::vector<BenchRow> rows;
  const StBox bbox = trace_bounding_box(trace);
  const BuiltStore full = build_full(trace, base, BackendKind::rtree);
  const double full_mean = mean_window_pok_over_tiles(full.paco->store(), base, bbox);
  const QueryWindow qw = default_bench_window(bbox, base);

  for (const double thresh : thresholds) {
    const BuiltStore replayed = build_replayed(trace, base, BackendKind::rtree, thresh);
    BenchRow r;
    r.suite = "insthresh-sweep";
    char label[32];
    std::snprintf(label, sizeof(label), "ins=%.2f", thresh);
    r.config = label;
    r.kept = replayed.stats.kept;
    r.total = replayed.stats.total;
    r.bytes = store_bytes(*replayed.paco);
    r.mean_pok = mean_window_pok_over_tiles(replayed.paco->store(), replayed.paco->config(), bbox);
    r.pok_retention = full_mean > 0.0 ? r.mean_pok / full_mean : 1.0;
    PoKResult res;
    r.median_ms = measure_median_ms([&] { res = replayed.paco->window_pok(qw); });
    r.candidates = res.n_candidates;
    r.t_p = res.t_p;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<BenchRow> bench_backend_compare(std::span<const ContextPoint> trace,
                                            const PacoConfig& base) {
  std::vector<BenchRow> rows;
  const StBox bbox = trace_bounding_box(trace);
  const QueryWindow qw = default_bench_window(bbox, base);
  const double full_mean = [&] {
    const BuiltStore f = build_full(trace, base, BackendKind::rtree);
    return mean_window_pok_over_tiles(f.paco->store(), base, bbox);
  }();

  struct Config {
    const char* label;
    BackendKind kind;
    RefMode mode;
    bool smart;
  };
  const Config configs[] = {
      {"rtree+reftree", BackendKind::rtree, RefMode::kd_tree, false},
      {"rtree+linear", BackendKind::rtree, RefMode::linear_scan, false},
      {"table+reftree", BackendKind::table, RefMode::kd_tree, false},
      {"table+linear", BackendKind::table, RefMode::linear_scan, false},
      {"rtree+reftree+smart0.8", BackendKind::rtree, RefMode::kd_tree, true},
  };

  for (const Config& c : configs) {
    const BuiltStore built = c.smart ? build_replayed(trace, base, c.kind, 0.8)
                                     : build_full(trace, base, c.kind);
    BenchRow r;
    r.suite = "backend-compare";
    r.config = c.label;
    r.kept = built.stats.kept;
    r.total = built.stats.total;
    r.bytes = store_bytes(*built.paco);
    PoKResult res;
    r.median_ms = measure_median_ms([&] { res = built.paco->window_pok(qw, {}, c.mode); });
    r.mean_pok = res.pok;
    r.pok_retention = full_mean > 0.0
                          ? mean_window_pok_over_tiles(built.paco->store(), built.paco->config(),
                                                       bbox) /
                                full_mean
                          : 1.0;
    r.candidates = res.n_candidates;
    r.t_p = res.t_p;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<BenchRow> bench_gridfactor_sweep(std::span<const ContextPoint> trace,
                                             const PacoConfig& base,
                                             std::span<const double> grid_factors) {
  std::vector<BenchRow> rows;
  const StBox bbox = trace_bounding_box(trace);
  const QueryWindow qw = default_bench_window(bbox, base);
  const BuiltStore full = build_full(trace, base, BackendKind::rtree);

  for (const double gf : grid_factors) {
    ConfigOverrides o;
    o.grid_factor = gf;
    BenchRow r;
    r.suite = "gridfactor-sweep";
    char label[32];
    std::snprintf(label, sizeof(label), "gf=%.1f", gf);
    r.config = label;
    r.kept = full.stats.kept;
    r.total = full.stats.total;
    r.bytes = store_bytes(*full.paco);
    PoKResult res;
    r.median_ms = measure_median_ms([&] { res = full.paco->window_pok(qw, o); });
    r.mean_pok = res.pok;
    r.pok_retention = 1.0;
    r.candidates = res.n_candidates;
    r.t_p = res.t_p;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace paco
