#include "paco/ref_tree.hpp"

#include <algorithm>

#include "paco/geo.hpp"

namespace paco {

double RefTree::key(const ContextPoint& p, int axis) const {
  switch (axis) {
    case 0: return p.x * scale_[0];
    case 1: return p.y * scale_[1];
    default: return static_cast<double>(p.t) * scale_[2];
  }
}

RefTree RefTree::build(std::vector<ContextPoint> points, const PacoConfig& cfg) {
  RefTree t;
  t.scale_[0] = kMetersPerDegree / cfg.space_range_m;
  t.scale_[1] = kMetersPerDegree / cfg.space_range_m;
  t.scale_[2] = 1.0 / cfg.time_range_s;
  t.pts_ = std::move(points);
  if (!t.pts_.empty()) t.build_rec(0, t.pts_.size(), 0, 1);
  return t;
}

void RefTree::build_rec(std::size_t lo, std::size_t hi, int axis, int depth) {
  depth_ = std::max(depth_, depth);
  if (hi - lo <= 1) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(pts_.begin() + lo, pts_.begin() + mid, pts_.begin() + hi,
                   [&](const ContextPoint& a, const ContextPoint& b) {
                     const double ka = key(a, axis), kb = key(b, axis);
                     if (ka != kb) return ka < kb;
                     return a.id < b.id;
                   });
  const int next = (axis + 1) % 3;
  build_rec(lo, mid, next, depth + 1);
  build_rec(mid + 1, hi, next, depth + 1);
}

void RefTree::range_rec(std::size_t lo, std::size_t hi, int axis, const StBox& box,
                        const double (&key_lo)[3], const double (&key_hi)[3],
                        std::vector<ContextPoint>& out) const {
  if (lo >= hi) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  const ContextPoint& p = pts_[mid];
  if (box.contains(p)) out.push_back(p);
  const double k = key(p, axis);
  const int next = (axis + 1) % 3;
  // Left subtree keys are <= k, right subtree keys >= k; scaling is
  // monotone, so pruning on scaled bounds can never drop a raw match.
  if (key_lo[axis] <= k) range_rec(lo, mid, next, box, key_lo, key_hi, out);
  if (key_hi[axis] >= k) range_rec(mid + 1, hi, next, box, key_lo, key_hi, out);
}

std::vector<ContextPoint> RefTree::range(const StBox& box) const {
  std::vector<ContextPoint> out;
  if (pts_.empty()) return out;
  const double key_lo[3] = {box.space.min.lon * scale_[0], box.space.min.lat * scale_[1],
                            box.time.lo * scale_[2]};
  const double key_hi[3] = {box.space.max.lon * scale_[0], box.space.max.lat * scale_[1],
                            box.time.hi * scale_[2]};
  range_rec(0, pts_.size(), 0, box, key_lo, key_hi, out);
  return out;
}

}  // namespace paco
