#include "paco/store.hpp"

#include <algorithm>
#include <cmath>

#include "paco/rtree_store.hpp"
#include "paco/table_store.hpp"

namespace paco {

std::unique_ptr<StoreBackend> make_store(BackendKind kind) {
  if (kind == BackendKind::rtree) return std::make_unique<RTreeStore>();
  return std::make_unique<TableStore>();
}

double nn_distance(const ContextPoint& p, const QueryPoint& q, const PacoConfig& cfg) {
  const double ds = haversine_distance({p.x, p.y}, {q.lon, q.lat}) / cfg.space_range_m;
  const double dt = std::fabs(static_cast<double>(p.t) - q.t) / cfg.time_range_s;
  return std::sqrt(ds * ds + dt * dt);
}

std::vector<ContextPoint> assemble_sequence(std::vector<ContextPoint> in_interval,
                                            const ContextPoint& a, const ContextPoint& b) {
  if (a == b) return {a};

  std::sort(in_interval.begin(), in_interval.end(), [](const ContextPoint& l, const ContextPoint& r) {
    if (l.t != r.t) return l.t < r.t;
    return l.id < r.id;
  });

  // The endpoints bound the interval, so pinning them to the ends keeps
  // the timestamps non-decreasing even across ties.
  const bool a_first = a.t < b.t || (a.t == b.t && a.id < b.id);
  const ContextPoint& first = a_first ? a : b;
  const ContextPoint& last = a_first ? b : a;

  auto it = std::find(in_interval.begin(), in_interval.end(), first);
  if (it != in_interval.end()) std::rotate(in_interval.begin(), it, it + 1);
  auto jt = std::find(in_interval.begin(), in_interval.end(), last);
  if (jt != in_interval.end()) std::rotate(jt, jt + 1, in_interval.end());
  return in_interval;
}

StBox all_space_box(double t_lo, double t_hi) {
  return {{{-180.0, -90.0}, {180.0, 90.0}}, {t_lo, t_hi}};
}

}  // namespace paco
