#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "paco/paco.hpp"

namespace paco {

/// One benchmark configuration result. The CSV schema is fixed:
/// suite,config,kept,total,bytes,mean_pok,pok_retention,median_ms;
/// the trailing diagnostic fields stay in memory only.
struct BenchRow {
  std::string suite;
  std::string config;
  std::size_t kept = 0;
  std::size_t total = 0;
  std::size_t bytes = 0;
  double mean_pok = 0.0;
  double pok_retention = 1.0;
  double median_ms = 0.0;
  // Not part of the CSV schema:
  std::size_t candidates = 0;
  double t_p = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "suite,config,kept,total,bytes,mean_pok,pok_retention,median_ms";

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out);

struct ReplayStats {
  std::size_t kept = 0;
  std::size_t total = 0;
};

/// Chronological smart-insert replay of a time-sorted point list.
ReplayStats replay_trace(Paco& paco, std::span<const ContextPoint> trace);

StBox trace_bounding_box(std::span<const ContextPoint> trace);  // throws on empty

/// Coverage metric behind the "mean window PoK" columns: Range-sized
/// windows tile the trace's spatiotemporal bounding box (tile counts
/// capped per axis by striding, deterministically) and their window_pok
/// values are averaged. Retention is this metric on a replayed store
/// divided by the same metric on the full-insert store.
struct EvalProtocol {
  int max_tiles_per_axis = 12;
};

double mean_window_pok_over_tiles(const StoreBackend& store, const PacoConfig& cfg,
                                  const StBox& trace_bbox, const EvalProtocol& proto = {});

/// Median wall time of `samples` runs after `warmups` discarded runs.
double measure_median_ms(const std::function<void()>& fn, int warmups = 3, int samples = 5);

/// Benchmark suites. Each takes the full trace (time-sorted points) and
/// the base configuration.
std::vector<BenchRow> bench_insthresh_sweep(std::span<const ContextPoint> trace,
                                            const PacoConfig& base,
                                            std::span<const double> thresholds);

/// The five structure combinations: {rtree, table} x {kd reference tree,
/// linear reference scan} on the full store, plus rtree+kd over a smart
/// insert replay at ins_thresh 0.8.
std::vector<BenchRow> bench_backend_compare(std::span<const ContextPoint> trace,
                                            const PacoConfig& base);

std::vector<BenchRow> bench_gridfactor_sweep(std::span<const ContextPoint> trace,
                                             const PacoConfig& base,
                                             std::span<const double> grid_factors);

/// The deterministic window used by the comparison suites: centered on
/// the trace bounding box, spanning min(10 SpaceRange, bbox) spatially
/// and min(2.8 TimeRange, bbox) temporally.
QueryWindow default_bench_window(const StBox& bbox, const PacoConfig& cfg);

}  // namespace paco
