#include "paco/rtree_store.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace paco {

RTreeStore::RTreeStore() : root_(std::make_unique<Node>()) {}

RTreeStore::Rect RTreeStore::Rect::of_point(const ContextPoint& p) {
  Rect r;
  r.lo = {p.x, p.y, static_cast<double>(p.t)};
  r.hi = r.lo;
  return r;
}

RTreeStore::Rect RTreeStore::Rect::join(const Rect& a, const Rect& b) {
  Rect r;
  for (int d = 0; d < 3; ++d) {
    r.lo[d] = std::min(a.lo[d], b.lo[d]);
    r.hi[d] = std::max(a.hi[d], b.hi[d]);
  }
  return r;
}

bool RTreeStore::Rect::intersects(const Rect& o) const {
  for (int d = 0; d < 3; ++d)
    if (lo[d] > o.hi[d] || hi[d] < o.lo[d]) return false;
  return true;
}

double RTreeStore::Rect::volume() const {
  double v = 1.0;
  for (int d = 0; d < 3; ++d) v *= hi[d] - lo[d];
  return v;
}

double RTreeStore::Rect::margin() const {
  double m = 0.0;
  for (int d = 0; d < 3; ++d) m += hi[d] - lo[d];
  return m;
}

RTreeStore::Rect RTreeStore::tight_rect(const Node& n) {
  Rect r = n.rects.front();
  for (std::size_t i = 1; i < n.rects.size(); ++i) r = Rect::join(r, n.rects[i]);
  return r;
}

RTreeStore::Rect RTreeStore::box_rect(const StBox& b) {
  Rect r;
  r.lo = {b.space.min.lon, b.space.min.lat, b.time.lo};
  r.hi = {b.space.max.lon, b.space.max.lat, b.time.hi};
  return r;
}

// Least volume enlargement; ties by least margin enlargement, then by
// smaller current margin. Point data makes early volumes degenerate, so
// the margin fallbacks do the real discrimination there.
int RTreeStore::choose_subtree(const Node& n, const Rect& r) {
  int best = 0;
  double best_dv = std::numeric_limits<double>::infinity();
  double best_dm = best_dv, best_m = best_dv;
  for (std::size_t i = 0; i < n.rects.size(); ++i) {
    const Rect j = Rect::join(n.rects[i], r);
    const double dv = j.volume() - n.rects[i].volume();
    const double dm = j.margin() - n.rects[i].margin();
    const double m = n.rects[i].margin();
    if (dv < best_dv || (dv == best_dv && (dm < best_dm || (dm == best_dm && m < best_m)))) {
      best = static_cast<int>(i);
      best_dv = dv;
      best_dm = dm;
      best_m = m;
    }
  }
  return best;
}

// Quadratic split: seed with the pair wasting the most space, then place
// remaining entries by strongest preference. Falls back to margin
// differences whenever volumes are degenerate.
std::unique_ptr<RTreeStore::Node> RTreeStore::split(Node& node) {
  const std::size_t n = node.count();
  std::vector<Rect> rects = std::move(node.rects);
  std::vector<std::unique_ptr<Node>> children = std::move(node.children);
  std::vector<std::uint32_t> items = std::move(node.items);

  // PickSeeds.
  std::size_t seed1 = 0, seed2 = 1;
  double best_v = -std::numeric_limits<double>::infinity();
  double best_m = best_v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rect jo = Rect::join(rects[i], rects[j]);
      const double dv = jo.volume() - rects[i].volume() - rects[j].volume();
      const double dm = jo.margin() - rects[i].margin() - rects[j].margin();
      if (dv > best_v || (dv == best_v && dm > best_m)) {
        best_v = dv;
        best_m = dm;
        seed1 = i;
        seed2 = j;
      }
    }
  }

  auto sibling = std::make_unique<Node>();
  sibling->leaf = node.leaf;
  node.rects.clear();
  node.children.clear();
  node.items.clear();

  Rect cover1 = rects[seed1], cover2 = rects[seed2];
  auto assign = [&](std::size_t idx, bool to_first) {
    Node& dst = to_first ? node : *sibling;
    dst.rects.push_back(rects[idx]);
    if (dst.leaf)
      dst.items.push_back(items[idx]);
    else
      dst.children.push_back(std::move(children[idx]));
    Rect& cover = to_first ? cover1 : cover2;
    cover = Rect::join(cover, rects[idx]);
  };
  assign(seed1, true);
  assign(seed2, false);

  std::vector<bool> placed(n, false);
  placed[seed1] = placed[seed2] = true;
  std::size_t remaining = n - 2;

  while (remaining > 0) {
    // Force-assign when one group needs every remaining entry to reach
    // the minimum fill.
    if (node.count() + remaining == kMinEntries) {
      for (std::size_t i = 0; i < n; ++i)
        if (!placed[i]) assign(i, true);
      break;
    }
    if (sibling->count() + remaining == kMinEntries) {
      for (std::size_t i = 0; i < n; ++i)
        if (!placed[i]) assign(i, false);
      break;
    }

    // PickNext: entry with the greatest preference difference.
    std::size_t pick = n;
    double pick_pref = -1.0;
    bool pick_first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      const double d1v = Rect::join(cover1, rects[i]).volume() - cover1.volume();
      const double d2v = Rect::join(cover2, rects[i]).volume() - cover2.volume();
      const double d1m = Rect::join(cover1, rects[i]).margin() - cover1.margin();
      const double d2m = Rect::join(cover2, rects[i]).margin() - cover2.margin();
      const double pref = std::fabs(d1v - d2v) + std::fabs(d1m - d2m);
      if (pick == n || pref > pick_pref) {
        pick = i;
        pick_pref = pref;
        if (d1v != d2v)
          pick_first = d1v < d2v;
        else if (d1m != d2m)
          pick_first = d1m < d2m;
        else if (cover1.volume() != cover2.volume())
          pick_first = cover1.volume() < cover2.volume();
        else
          pick_first = node.count() <= sibling->count();
      }
    }
    assign(pick, pick_first);
    placed[pick] = true;
    --remaining;
  }
  return sibling;
}

std::unique_ptr<RTreeStore::Node> RTreeStore::insert_rec(Node& node, const Rect& r,
                                                         std::uint32_t item) {
  if (node.leaf) {
    node.rects.push_back(r);
    node.items.push_back(item);
  } else {
    const int i = choose_subtree(node, r);
    auto sib = insert_rec(*node.children[i], r, item);
    node.rects[i] = tight_rect(*node.children[i]);
    if (sib) {
      node.rects.push_back(tight_rect(*sib));
      node.children.push_back(std::move(sib));
    }
  }
  if (node.count() > kMaxEntries) return split(node);
  return nullptr;
}

void RTreeStore::insert(const ContextPoint& p) {
  if (by_id_.count(p.id)) throw DuplicateIdError(p.id);
  const auto idx = static_cast<std::uint32_t>(points_.size());
  auto sib = insert_rec(*root_, Rect::of_point(p), idx);
  if (sib) {
    auto new_root = std::make_unique<Node>();
    new_root->leaf = false;
    new_root->rects.push_back(tight_rect(*root_));
    new_root->children.push_back(std::move(root_));
    new_root->rects.push_back(tight_rect(*sib));
    new_root->children.push_back(std::move(sib));
    root_ = std::move(new_root);
  }
  by_id_.emplace(p.id, points_.size());
  points_.push_back(p);
}

std::optional<ContextPoint> RTreeStore::find_id(std::uint64_t id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return points_[it->second];
}

void RTreeStore::range_rec(const Node& n, const Rect& query,
                           std::vector<ContextPoint>& out) const {
  for (std::size_t i = 0; i < n.rects.size(); ++i) {
    if (!query.intersects(n.rects[i])) continue;
    if (n.leaf)
      out.push_back(points_[n.items[i]]);
    else
      range_rec(*n.children[i], query, out);
  }
}

std::vector<ContextPoint> RTreeStore::range_query(const StBox& box) const {
  std::vector<ContextPoint> out;
  range_rec(*root_, box_rect(box), out);
  return out;
}

std::optional<ContextPoint> RTreeStore::nearest_neighbor(const QueryPoint& q,
                                                         const PacoConfig& cfg) const {
  if (points_.empty()) return std::nullopt;

  // Best-first search. The lower bound for a rectangle is the normalized
  // distance to its closest spherical-patch point; it is computed with
  // the same haversine primitive as the point metric, deflated a hair so
  // rounding can never prune the true optimum.
  auto rect_bound = [&](const Rect& r) {
    const GeoBox gb{{r.lo[0], r.lo[1]}, {r.hi[0], r.hi[1]}};
    const GeoCoord close = closest_point_in_box(gb, {q.lon, q.lat});
    const double ds = haversine_distance(close, {q.lon, q.lat}) / cfg.space_range_m;
    double dt = 0.0;
    if (q.t < r.lo[2])
      dt = (r.lo[2] - q.t) / cfg.time_range_s;
    else if (q.t > r.hi[2])
      dt = (q.t - r.hi[2]) / cfg.time_range_s;
    return std::sqrt(ds * ds + dt * dt) * (1.0 - 1e-12);
  };

  struct Cand {
    double bound;
    const Node* node;
    bool operator>(const Cand& o) const { return bound > o.bound; }
  };
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  heap.push({0.0, root_.get()});

  const ContextPoint* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  while (!heap.empty()) {
    const Cand c = heap.top();
    heap.pop();
    if (best && c.bound > best_d) break;
    const Node& n = *c.node;
    for (std::size_t i = 0; i < n.rects.size(); ++i) {
      if (n.leaf) {
        const ContextPoint& p = points_[n.items[i]];
        const double d = nn_distance(p, q, cfg);
        if (!best || d < best_d || (d == best_d && p.id < best->id)) {
          best = &p;
          best_d = d;
        }
      } else {
        const double b = rect_bound(n.rects[i]);
        if (!best || b <= best_d) heap.push({b, n.children[i].get()});
      }
    }
  }
  return *best;
}

std::vector<ContextPoint> RTreeStore::get_sequence(const ContextPoint& a,
                                                   const ContextPoint& b) const {
  auto fa = find_id(a.id), fb = find_id(b.id);
  if (!fa || *fa != a) throw NotFoundError("get_sequence: first endpoint not stored");
  if (!fb || *fb != b) throw NotFoundError("get_sequence: second endpoint not stored");
  const double lo = static_cast<double>(std::min(a.t, b.t));
  const double hi = static_cast<double>(std::max(a.t, b.t));
  return assemble_sequence(range_query(all_space_box(lo, hi)), a, b);
}

std::optional<StBox> RTreeStore::extent() const {
  if (points_.empty()) return std::nullopt;
  const Rect r = tight_rect(*root_);
  return StBox{{{r.lo[0], r.lo[1]}, {r.hi[0], r.hi[1]}}, {r.lo[2], r.hi[2]}};
}

void RTreeStore::validate() const {
  struct Walker {
    int leaf_depth = -1;
    std::size_t seen_items = 0;

    Rect walk(const Node& n, int depth, bool is_root) {
      if (!is_root && (n.count() < kMinEntries || n.count() > kMaxEntries))
        throw Error("rtree: node fanout out of bounds");
      if (is_root && n.count() > kMaxEntries) throw Error("rtree: root overflow");
      if (n.leaf) {
        if (leaf_depth == -1)
          leaf_depth = depth;
        else if (leaf_depth != depth)
          throw Error("rtree: leaves at unequal depth");
        seen_items += n.count();
        if (n.items.size() != n.rects.size()) throw Error("rtree: leaf arity mismatch");
      } else {
        if (is_root && n.count() < 2) throw Error("rtree: internal root underflow");
        if (n.children.size() != n.rects.size()) throw Error("rtree: node arity mismatch");
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          const Rect r = walk(*n.children[i], depth + 1, false);
          if (!(r == n.rects[i])) throw Error("rtree: stale parent rectangle");
        }
      }
      if (n.count() == 0) {
        if (!is_root) throw Error("rtree: empty non-root node");
        return Rect{};
      }
      Rect r = n.rects.front();
      for (std::size_t i = 1; i < n.rects.size(); ++i) r = Rect::join(r, n.rects[i]);
      return r;
    }
  };

  Walker w;
  w.walk(*root_, 0, true);
  if (w.seen_items != points_.size()) throw Error("rtree: item count mismatch");
}

}  // namespace paco
