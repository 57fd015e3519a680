#pragma once

#include <vector>

#include "paco/config.hpp"
#include "paco/types.hpp"

namespace paco {

/// In-memory 3-d partition tree over one window's reference set.
///
/// Coordinates are normalized before splitting — spatial degrees scaled
/// to meters and divided by SpaceRange, seconds divided by TimeRange —
/// so median splits are meaningful across dimensions. Membership tests
/// run on the raw coordinates, which keeps range() exactly equivalent to
/// a linear scan. Immutable after build; built per window query and
/// discarded with it.
class RefTree {
 public:
  RefTree() = default;

  /// Median-split construction cycling lon -> lat -> t. Ties on the
  /// split key send the lower id to the left subtree, which makes the
  /// layout independent of the input order.
  static RefTree build(std::vector<ContextPoint> points, const PacoConfig& cfg);

  /// Exactly the member points inside `box` (inclusive); ordered by tree
  /// layout, which is deterministic for a given point set.
  std::vector<ContextPoint> range(const StBox& box) const;

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  int depth() const { return depth_; }

 private:
  double key(const ContextPoint& p, int axis) const;
  void build_rec(std::size_t lo, std::size_t hi, int axis, int depth);
  void range_rec(std::size_t lo, std::size_t hi, int axis, const StBox& box,
                 const double (&key_lo)[3], const double (&key_hi)[3],
                 std::vector<ContextPoint>& out) const;

  std::vector<ContextPoint> pts_;  // median-arranged, the subtree root at mid
  double scale_[3] = {1.0, 1.0, 1.0};
  int depth_ = 0;
};

}  // namespace paco
