#include "paco/config.hpp"

#include <cmath>

#include "paco/errors.hpp"

namespace paco {

void PacoConfig::validate() const {
  if (!(space_range_m > 0.0) || !std::isfinite(space_range_m))
    throw ConfigError("space_range_m must be positive");
  if (!(time_range_s > 0.0) || !std::isfinite(time_range_s))
    throw ConfigError("time_range_s must be positive");
  if (!(space_weight >= 0.0 && space_weight <= 1.0))
    throw ConfigError("space_weight must be in [0, 1]");
  if (!(time_weight >= 0.0 && time_weight <= 1.0))
    throw ConfigError("time_weight must be in [0, 1]");
  if (grid_factor != 0.5 && grid_factor != 1.0 && grid_factor != 2.0 && grid_factor != 4.0)
    throw ConfigError("grid_factor must be one of 0.5, 1, 2, 4");
  if (!(ins_thresh >= 0.0) || !std::isfinite(ins_thresh))
    throw ConfigError("ins_thresh must be non-negative");
  if (trim_thresh < 1) throw ConfigError("trim_thresh must be >= 1");
}

PacoConfig overlay(const PacoConfig& base, const ConfigOverrides& o) {
  PacoConfig c = base;
  if (o.grid_factor) c.grid_factor = *o.grid_factor;
  if (o.trim_thresh) c.trim_thresh = *o.trim_thresh;
  if (o.space_weight) c.space_weight = *o.space_weight;
  if (o.time_weight) c.time_weight = *o.time_weight;
  if (o.ins_thresh) c.ins_thresh = *o.ins_thresh;
  c.validate();
  return c;
}

}  // namespace paco
