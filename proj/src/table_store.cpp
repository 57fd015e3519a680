#include "paco/table_store.hpp"

#include <algorithm>

namespace paco {

void TableStore::insert(const ContextPoint& p) {
  if (by_id_.count(p.id)) throw DuplicateIdError(p.id);
  by_id_.emplace(p.id, points_.size());
  points_.push_back(p);
}

std::optional<ContextPoint> TableStore::find_id(std::uint64_t id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return points_[it->second];
}

std::vector<ContextPoint> TableStore::range_query(const StBox& box) const {
  std::vector<ContextPoint> out;
  for (const ContextPoint& p : points_)
    if (box.contains(p)) out.push_back(p);
  return out;
}

std::optional<ContextPoint> TableStore::nearest_neighbor(const QueryPoint& q,
                                                         const PacoConfig& cfg) const {
  if (points_.empty()) return std::nullopt;
  const ContextPoint* best = nullptr;
  double best_d = 0.0;
  for (const ContextPoint& p : points_) {
    const double d = nn_distance(p, q, cfg);
    if (!best || d < best_d || (d == best_d && p.id < best->id)) {
      best = &p;
      best_d = d;
    }
  }
  return *best;
}

std::vector<ContextPoint> TableStore::get_sequence(const ContextPoint& a,
                                                   const ContextPoint& b) const {
  auto fa = find_id(a.id), fb = find_id(b.id);
  if (!fa || *fa != a) throw NotFoundError("get_sequence: first endpoint not stored");
  if (!fb || *fb != b) throw NotFoundError("get_sequence: second endpoint not stored");
  const double lo = static_cast<double>(std::min(a.t, b.t));
  const double hi = static_cast<double>(std::max(a.t, b.t));
  return assemble_sequence(range_query(all_space_box(lo, hi)), a, b);
}

std::optional<StBox> TableStore::extent() const {
  if (points_.empty()) return std::nullopt;
  StBox e{{{points_[0].x, points_[0].y}, {points_[0].x, points_[0].y}},
          {static_cast<double>(points_[0].t), static_cast<double>(points_[0].t)}};
  for (const ContextPoint& p : points_) {
    e.space.min.lon = std::min(e.space.min.lon, p.x);
    e.space.max.lon = std::max(e.space.max.lon, p.x);
    e.space.min.lat = std::min(e.space.min.lat, p.y);
    e.space.max.lat = std::max(e.space.max.lat, p.y);
    e.time.lo = std::min(e.time.lo, static_cast<double>(p.t));
    e.time.hi = std::max(e.time.hi, static_cast<double>(p.t));
  }
  return e;
}

}  // namespace paco
