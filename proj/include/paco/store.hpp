#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "paco/config.hpp"
#include "paco/errors.hpp"
#include "paco/types.hpp"

namespace paco {

/// Backend contract: a persistent multiset of ContextPoints with unique
/// ids, answering range, nearest-neighbor and time-sequence queries.
/// Implementations must be observationally equivalent on every
/// operation; only their cost profiles differ.
///
/// Concurrency: one writer at a time; any number of readers between
/// writes. A query never observes a partially applied insert.
class StoreBackend {
 public:
  virtual ~StoreBackend() = default;

  /// Throws DuplicateIdError when the id is already present.
  virtual void insert(const ContextPoint& p) = 0;

  virtual std::size_t size() const = 0;
  virtual bool contains_id(std::uint64_t id) const = 0;
  virtual std::optional<ContextPoint> find_id(std::uint64_t id) const = 0;

  /// Exactly the stored points inside `box` (inclusive bounds); order
  /// unspecified.
  virtual std::vector<ContextPoint> range_query(const StBox& box) const = 0;

  /// Stored point minimizing nn_distance(p, q, cfg); ties break toward
  /// the smaller id. Empty store yields nullopt.
  virtual std::optional<ContextPoint> nearest_neighbor(const QueryPoint& q,
                                                       const PacoConfig& cfg) const = 0;

  /// All stored points with t in [min(a.t, b.t), max(a.t, b.t)], ordered
  /// ascending by (t, id) with the endpoints pinned to the ends. Both
  /// endpoints must be stored points (throws NotFoundError otherwise);
  /// a == b yields just [a].
  virtual std::vector<ContextPoint> get_sequence(const ContextPoint& a,
                                                 const ContextPoint& b) const = 0;

  /// Every stored point in insertion order.
  virtual std::vector<ContextPoint> all_points() const = 0;

  /// Tight bounding box of the stored points; nullopt when empty.
  virtual std::optional<StBox> extent() const = 0;

  virtual const char* kind() const = 0;
};

enum class BackendKind { rtree, table };

std::unique_ptr<StoreBackend> make_store(BackendKind kind);

/// Normalized space-time distance: sqrt((d_s/SpaceRange)^2 + (dt/TimeRange)^2)
/// with d_s the haversine distance in meters.
double nn_distance(const ContextPoint& p, const QueryPoint& q, const PacoConfig& cfg);

/// Shared get_sequence assembly over the points of the closed time
/// interval (endpoints included in `in_interval`).
std::vector<ContextPoint> assemble_sequence(std::vector<ContextPoint> in_interval,
                                            const ContextPoint& a, const ContextPoint& b);

/// Query box covering all representable space and the given times.
StBox all_space_box(double t_lo, double t_hi);

}  // namespace paco
