#pragma once

#include <optional>

namespace paco {

/// Store-wide tuning parameters.
///
/// `space_range_m` / `time_range_s` are the distances beyond which a
/// stored point exerts no influence; they double as the unit scales that
/// make space and time comparable in nearest-neighbor and reference-tree
/// computations. Changing them invalidates smart-insert history, so the
/// facade only alters them through an explicit reconfigure.
struct PacoConfig {
  double space_range_m = 1000.0;
  double time_range_s = 216000.0;  // 60 h
  double space_weight = 1.0;       // in [0, 1]
  double time_weight = 1.0;        // in [0, 1]
  double grid_factor = 1.0;        // sub-cubes per range unit, one of {0.5, 1, 2, 4}
  double ins_thresh = 0.8;         // smart-insert redundancy cutoff; > 1 keeps everything
  int trim_thresh = 10;            // candidate cap per sub-cube union

  /// Throws ConfigError when any field is out of its domain.
  void validate() const;
};

/// Per-call parameter overlay. Ranges are deliberately absent: they are
/// store-level state, not query knobs.
struct ConfigOverrides {
  std::optional<double> grid_factor;
  std::optional<int> trim_thresh;
  std::optional<double> space_weight;
  std::optional<double> time_weight;
  std::optional<double> ins_thresh;
};

inline bool operator==(const ConfigOverrides& a, const ConfigOverrides& b) {
  return a.grid_factor == b.grid_factor && a.trim_thresh == b.trim_thresh &&
         a.space_weight == b.space_weight && a.time_weight == b.time_weight &&
         a.ins_thresh == b.ins_thresh;
}

/// Applies `o` on top of `base` and validates the result.
PacoConfig overlay(const PacoConfig& base, const ConfigOverrides& o);

}  // namespace paco
