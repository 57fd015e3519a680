#pragma once

#include <iosfwd>
#include <vector>

#include "paco/pok.hpp"

namespace paco {

/// Spatial PoK grid of one window, time axis collapsed by taking the
/// maximum over the time cells. Row 0 is the northernmost (max-lat) row;
/// columns run west to east.
struct HeatmapGrid {
  int nx = 0;
  int ny = 0;
  std::vector<double> cells;  // row-major, ny rows of nx

  double at(int col, int row) const { return cells[static_cast<std::size_t>(row) * nx + col]; }
  double mean() const;
};

HeatmapGrid heatmap_from_eval(const WindowEval& eval);

/// Requires a bounded spatial window (time may clamp to the data
/// extent); throws WindowError otherwise.
HeatmapGrid compute_heatmap(const QueryWindow& win, const StoreBackend& store,
                            const PacoConfig& cfg);

/// CSV matrix, one row per line, values at 6 decimal digits.
void write_heatmap_csv(const HeatmapGrid& grid, std::ostream& out);

/// Binary P5 PGM, maxval 255, PoK mapped linearly 0 -> 0, 1 -> 255.
void write_heatmap_pgm(const HeatmapGrid& grid, std::ostream& out);

}  // namespace paco
