#pragma once

#include <array>
#include <memory>
#include <unordered_map>
#include <vector>

#include "paco/store.hpp"

namespace paco {

/// Three-dimensional R-tree over (lon, lat, t) with quadratic-split
/// insertion. Points are stored as degenerate boxes (min == max per
/// dimension). Fanout 4..8; no deletion.
class RTreeStore final : public StoreBackend {
 public:
  static constexpr int kMaxEntries = 8;
  static constexpr int kMinEntries = 4;

  RTreeStore();

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
  const char* kind() const override { return "rtree"; }

  /// Walks the whole tree and throws Error on any violated structural
  /// invariant: fanout bounds, uniform leaf depth, or a parent rectangle
  /// that is not the tight union of its child rectangles.
  void validate() const;

 private:
  struct Rect {
    std::array<double, 3> lo{};  // lon, lat, t
    std::array<double, 3> hi{};

    static Rect of_point(const ContextPoint& p);
    static Rect join(const Rect& a, const Rect& b);
    bool intersects(const Rect& o) const;
    bool operator==(const Rect& o) const { return lo == o.lo && hi == o.hi; }
    double volume() const;
    double margin() const;
  };

  struct Node {
    bool leaf = true;
    std::vector<Rect> rects;
    std::vector<std::unique_ptr<Node>> children;  // internal nodes
    std::vector<std::uint32_t> items;             // leaves: indices into points_

    std::size_t count() const { return rects.size(); }
  };

  static Rect tight_rect(const Node& n);
  static Rect box_rect(const StBox& b);
  static int choose_subtree(const Node& n, const Rect& r);
  std::unique_ptr<Node> insert_rec(Node& node, const Rect& r, std::uint32_t item);
  static std::unique_ptr<Node> split(Node& node);
  void range_rec(const Node& n, const Rect& query, std::vector<ContextPoint>& out) const;

  std::unique_ptr<Node> root_;
  std::vector<ContextPoint> points_;
  std::unordered_map<std::uint64_t, std::size_t> by_id_;
};

}  // namespace paco
