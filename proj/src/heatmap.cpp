#include "paco/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "paco/errors.hpp"

namespace paco {

double HeatmapGrid::mean() const {
  if (cells.empty()) return 0.0;
  double sum = 0.0;
  for (const double v : cells) sum += v;
  return sum / static_cast<double>(cells.size());
}

HeatmapGrid heatmap_from_eval(const WindowEval& eval) {
  HeatmapGrid g;
  g.nx = eval.grid.nx;
  g.ny = eval.grid.ny;
  g.cells.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
  for (int it = 0; it < eval.grid.nt; ++it) {
    for (int iy = 0; iy < eval.grid.ny; ++iy) {
      for (int ix = 0; ix < eval.grid.nx; ++ix) {
        const double v = eval.cell_pok[eval.grid.cell_index(ix, iy, it)];
        // Row 0 = north.
        double& cell = g.cells[static_cast<std::size_t>(eval.grid.ny - 1 - iy) * g.nx + ix];
        cell = std::max(cell, v);
      }
    }
  }
  return g;
}

HeatmapGrid compute_heatmap(const QueryWindow& win, const StoreBackend& store,
                            const PacoConfig& cfg) {
  if (!win.space) throw WindowError("heatmap requires a bounded spatial window");
  return heatmap_from_eval(evaluate_window(win, store, cfg));
}

void write_heatmap_csv(const HeatmapGrid& grid, std::ostream& out) {
  char buf[32];
  for (int row = 0; row < grid.ny; ++row) {
    for (int col = 0; col < grid.nx; ++col) {
      std::snprintf(buf, sizeof(buf), "%.6f", grid.at(col, row));
      if (col) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void write_heatmap_pgm(const HeatmapGrid& grid, std::ostream& out) {
  out << "P5\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  for (int row = 0; row < grid.ny; ++row) {
    for (int col = 0; col < grid.nx; ++col) {
      const double v = std::clamp(grid.at(col, row), 0.0, 1.0);
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
    }
  }
}

}  // namespace paco
