#pragma once

#include <unordered_map>
#include <vector>

#include "paco/store.hpp"

namespace paco {

/// Flat single-table baseline: an append-only vector scanned linearly by
/// every query. The conventional comparison point for the R-tree.
class TableStore final : public StoreBackend {
 public:
  void insert(const ContextPoint& p) override;
  std::size_t size() const override { return points_.size(); }
  bool contains_id(std::uint64_t id) const override { return by_id_.count(id) != 0; }
  std::optional<ContextPoint> find_id(std::uint64_t id) const override;
  std::vector<ContextPoint> range_query(const StBox& box) const override;
  std::optional<ContextPoint> nearest_neighbor(const QueryPoint& q,
                                               const PacoConfig& cfg) const override;
  std::vector<ContextPoint> get_sequence(const ContextPoint& a,
                                         const ContextPoint& b) const override;
  std::vector<ContextPoint> all_points() const override { return points_; }
  std::optional<StBox> extent() const override;
  const char* kind() const override { return "table"; }

 private:
  std::vector<ContextPoint> points_;
  std::unordered_map<std::uint64_t, std::size_t> by_id_;
};

}  // namespace paco
