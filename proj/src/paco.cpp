#include "paco/paco.hpp"

#include <utility>

namespace paco {

Paco::Paco(std::unique_ptr<StoreBackend> store, PacoConfig cfg)
    : store_(std::move(store)), cfg_(cfg) {
  cfg_.validate();
}

void Paco::insert(const ContextPoint& p) { store_->insert(p); }

InsertOutcome Paco::smart_insert(const ContextPoint& p) {
  if (store_->contains_id(p.id)) throw DuplicateIdError(p.id);
  // The probe window is one sub-cube whose target is p itself, so it
  // collapses to a single candidate query plus subcube_pok.
  const QueryPoint target = to_query_point(p);
  const std::vector<ContextPoint> cands = store_->range_query(influence_box(target, cfg_));
  const double measured = subcube_pok(target, cands, cfg_);
  InsertOutcome out{measured < cfg_.ins_thresh, measured, cfg_.ins_thresh};
  if (out.inserted)
    store_->insert(p);
  else
    ++rejected_;
  return out;
}

PoKResult Paco::window_pok(const QueryWindow& win, const ConfigOverrides& overrides,
                           RefMode mode) const {
  return paco::window_pok(win, *store_, overlay(cfg_, overrides), mode);
}

WindowEval Paco::window_eval(const QueryWindow& win, const ConfigOverrides& overrides,
                             RefMode mode) const {
  return paco::evaluate_window(win, *store_, overlay(cfg_, overrides), mode);
}

std::vector<ContextPoint> Paco::find_path(const QueryPoint& a, const QueryPoint& b) const {
  const auto na = store_->nearest_neighbor(a, cfg_);
  const auto nb = store_->nearest_neighbor(b, cfg_);
  if (!na || !nb) throw NotFoundError("find_path on an empty store");
  return store_->get_sequence(*na, *nb);
}

void Paco::reconfigure_ranges(double space_range_m, double time_range_s) {
  PacoConfig next = cfg_;
  next.space_range_m = space_range_m;
  next.time_range_s = time_range_s;
  next.validate();
  events_.push_back("reconfigure ranges: space " + std::to_string(cfg_.space_range_m) + " -> " +
                    std::to_string(space_range_m) + " m, time " +
                    std::to_string(cfg_.time_range_s) + " -> " + std::to_string(time_range_s) +
                    " s");
  cfg_ = next;
}

}  // namespace paco
