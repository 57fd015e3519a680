#pragma once

#include <memory>
#include <string>
#include <vector>

#include "paco/pok.hpp"
#include "paco/store.hpp"

namespace paco {

struct InsertOutcome {
  bool inserted = false;
  double measured_pok = 0.0;
  double threshold = 0.0;  // inserted iff measured_pok < threshold
};

/// The facade over one store: smart insert, window PoK with per-call
/// overrides, and find path. Writes are single-threaded; the probe and
/// insert of smart_insert see the same structure.
class Paco {
 public:
  Paco(std::unique_ptr<StoreBackend> store, PacoConfig cfg);

  /// Plain insert, no redundancy check (bulk ingest path).
  void insert(const ContextPoint& p);

  /// Probes the PoK of a single sub-cube centered on `p` — exactly the
  /// candidate's own influence neighborhood — and inserts only when the
  /// measured PoK is below ins_thresh. Throws DuplicateIdError when the
  /// id is taken.
  InsertOutcome smart_insert(const ContextPoint& p);

  PoKResult window_pok(const QueryWindow& win, const ConfigOverrides& overrides = {},
                       RefMode mode = RefMode::kd_tree) const;
  WindowEval window_eval(const QueryWindow& win, const ConfigOverrides& overrides = {},
                         RefMode mode = RefMode::kd_tree) const;

  /// Snaps both endpoints to their stored nearest neighbors, then walks
  /// the sequence between them; timestamps ascend. Throws NotFoundError
  /// on an empty store.
  std::vector<ContextPoint> find_path(const QueryPoint& a, const QueryPoint& b) const;

  /// Range changes invalidate smart-insert history, so they are only
  /// possible through this store-level switch, which is logged.
  void reconfigure_ranges(double space_range_m, double time_range_s);

  const PacoConfig& config() const { return cfg_; }
  const StoreBackend& store() const { return *store_; }
  StoreBackend& store() { return *store_; }
  std::uint64_t rejected_count() const { return rejected_; }
  const std::vector<std::string>& event_log() const { return events_; }

 private:
  std::unique_ptr<StoreBackend> store_;
  PacoConfig cfg_;
  std::uint64_t rejected_ = 0;
  std::vector<std::string> events_;
};

}  // namespace paco
