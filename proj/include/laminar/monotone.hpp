#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "laminar/lamination.hpp"

namespace laminar {

// Degree-one weakly monotone circle maps, piecewise linear with rational
// breakpoints, and the pushforward / pullback calculus on laminar relations.
//
// A map is stored as breakpoints (x_i, Y_i) where the x_i are strictly
// increasing in [0,1) and Y is the lift of the image: weakly increasing with
// Y(x_0 + 1) = Y_0 + 1. Flats (maximal collapsed arcs) are the fibers blown
// up by pullbacks. PL maps are closed under composition and exactly
// invertible on fibers, so every identity below is tested with equality.

class MonotoneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MonotoneMap {
 public:
  struct Breakpoint {
    Rational x;      // in [0,1)
    Rational ylift;  // lifted image value
  };

  // Breakpoints as circle-value pairs. The lift is reconstructed from the
  // anticlockwise gaps between consecutive image values, which must wind
  // exactly once around the circle; a segment meant to carry a full turn
  // needs an interior breakpoint to witness it. A single breakpoint (x, y)
  // denotes the rotation taking x to y.
  explicit MonotoneMap(const std::vector<std::pair<CirclePoint, CirclePoint>>& pts) {
    if (pts.empty()) throw MonotoneError("no breakpoints");
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i].first == sorted[i + 1].first)
        throw MonotoneError("duplicate breakpoint x = " +
                            laminar::to_string(sorted[i].first));
    std::vector<Breakpoint> bps;
    Rational y = sorted[0].second.value();
    bps.push_back({sorted[0].first.value(), y});
    Rational total(0);
    for (size_t i = 1; i < sorted.size(); ++i) {
      Rational gap = arc_length(sorted[i - 1].second, sorted[i].second);
      total += gap;
      y += gap;
      bps.push_back({sorted[i].first.value(), y});
    }
    total += arc_length(sorted.back().second, sorted[0].second);
    if (sorted.size() > 1 && total != 1)
      throw MonotoneError("breakpoints do not describe a degree-one map");
    init(std::move(bps));
  }

  // Breakpoints with explicit lifted image values.
  static MonotoneMap from_lifted(std::vector<Breakpoint> bps) {
    MonotoneMap m;
    m.init(std::move(bps));
    return m;
  }

  static MonotoneMap identity() { return rotation(Rational(0)); }

  static MonotoneMap rotation(const Rational& t) {
    MonotoneMap m;
    m.init({{Rational(0), mod1(t)}});
    return m;
  }

  // Collapses the closed anticlockwise arc [a, b] to the point c and maps the
  // complementary arc onto the complement of c at constant speed.
  static MonotoneMap collapse_arc(const CirclePoint& a, const CirclePoint& b,
                                  const CirclePoint& c) {
    if (a == b) return rotation(c.value() - a.value());
    MonotoneMap m;
    if (a.value() < b.value())
      m.init({{a.value(), c.value()}, {b.value(), c.value()}});
    else  // the collapsed arc wraps through 0
      m.init({{b.value(), c.value()}, {a.value(), c.value() + 1}});
    return m;
  }

  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  size_t segment_count() const { return bps_.size(); }

  // Lift value at lifted parameter t (any real rational).
  Rational lift_at(const Rational& t) const {
    const Rational& x0 = bps_[0].x;
    Integer period = rfloor(t - x0);
    Rational tt = t - Rational(period);  // in [x0, x0+1)
    size_t i = segment_index(tt);
    auto [xa, ya] = segment_start(i);
    auto [xb, yb] = segment_end(i);
    Rational y = xa == xb ? ya : ya + (tt - xa) * (yb - ya) / (xb - xa);
    return y + Rational(period);
  }

  CirclePoint apply(const CirclePoint& p) const {
    return CirclePoint(lift_at(p.value()));
  }

  // The exact fiber over q: a point off flat images, a closed arc over them.
  using Fiber = std::variant<CirclePoint, Arc>;

  Fiber preimage(const CirclePoint& q) const {
    // Solution intervals of Y(t) = qlift per segment, in lift coordinates
    // over one period [x0, x0+1].
    const Rational x0 = bps_[0].x;
    const Rational y0 = bps_[0].ylift;
    std::vector<std::pair<Rational, Rational>> pieces;
    for (int off = 0; off <= 1; ++off) {
      Rational ql = q.value() + Rational(rfloor(y0 - q.value())) + off;
      if (ql < y0 || ql > y0 + 1) continue;
      for (size_t i = 0; i < bps_.size(); ++i) {
        auto [xa, ya] = segment_start(i);
        auto [xb, yb] = segment_end(i);
        if (ql < ya || ql > yb) continue;
        if (ya == yb) {
          pieces.emplace_back(xa, xb);
        } else {
          Rational t = xa + (ql - ya) * (xb - xa) / (yb - ya);
          pieces.emplace_back(t, t);
        }
      }
    }
    assert(!pieces.empty());
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    // Merge touching pieces, including across the period wrap.
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& pc : pieces) {
      if (!merged.empty() && pc.first <= merged.back().second) {
        merged.back().second = rmax(merged.back().second, pc.second);
      } else {
        merged.push_back(pc);
      }
    }
    if (merged.size() > 1 && merged.front().first == x0 &&
        merged.back().second == x0 + 1) {
      merged.front().first = merged.back().first - 1;
      merged.pop_back();
    }
    assert(merged.size() == 1);
    auto [lo, hi] = merged.front();
    if (lo == hi) return CirclePoint(lo);
    if (hi - lo >= 1) throw MonotoneError("fiber covers the whole circle");
    return Arc(CirclePoint(lo), CirclePoint(hi));
  }

  // Maximal collapsed arcs, each as a closed anticlockwise arc, in circular
  // order of their starting points. Empty for injective maps.
  std::vector<Arc> flats() const {
    const size_t k = bps_.size();
    std::vector<Arc> out;
    if (k == 1) return out;
    auto rise = [&](size_t i) {
      return segment_end(i).second - segment_start(i).second;
    };
    // Find a non-flat segment to anchor the circular scan.
    size_t anchor = 0;
    while (anchor < k && rise(anchor) == 0) ++anchor;
    assert(anchor < k);  // degree one forbids an all-flat map
    std::optional<size_t> flat_start;
    for (size_t step = 1; step <= k; ++step) {
      size_t i = (anchor + step) % k;
      if (rise(i) == 0) {
        if (!flat_start) flat_start = i;
      } else if (flat_start) {
        out.emplace_back(CirclePoint(bps_[*flat_start].x), CirclePoint(bps_[i].x));
        flat_start.reset();
      }
    }
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
      return a.start() < b.start();
    });
    return out;
  }

  bool is_identity() const {
    return bps_.size() == 1 && bps_[0].x == bps_[0].ylift;
  }

  bool is_injective() const { return flats().empty(); }

  friend bool operator==(const MonotoneMap& f, const MonotoneMap& g) {
    if (f.bps_.size() != g.bps_.size()) return false;
    for (size_t i = 0; i < f.bps_.size(); ++i)
      if (f.bps_[i].x != g.bps_[i].x || f.bps_[i].ylift != g.bps_[i].ylift)
        return false;
    return true;
  }

 private:
  MonotoneMap() = default;

  std::pair<Rational, Rational> segment_start(size_t i) const {
    return {bps_[i].x, bps_[i].ylift};
  }
  std::pair<Rational, Rational> segment_end(size_t i) const {
    if (i + 1 < bps_.size()) return {bps_[i + 1].x, bps_[i + 1].ylift};
    return {bps_[0].x + 1, bps_[0].ylift + 1};
  }

  // Index of the segment whose half-open [start, end) contains t, for
  // t in [x0, x0+1).
  size_t segment_index(const Rational& t) const {
    size_t lo = 0, hi = bps_.size();
    while (hi - lo > 1) {
      size_t mid = (lo + hi) / 2;
      if (bps_[mid].x <= t) lo = mid;
      else hi = mid;
    }
    return lo;
  }

  void init(std::vector<Breakpoint> bps) {
    if (bps.empty()) throw MonotoneError("no breakpoints");
    for (auto& b : bps) {
      if (b.x < 0 || b.x >= 1) throw MonotoneError("breakpoint x outside [0,1)");
    }
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
      if (bps[i].x >= bps[i + 1].x)
        throw MonotoneError("breakpoint x values not strictly increasing");
      if (bps[i].ylift > bps[i + 1].ylift)
        throw MonotoneError("image values not weakly increasing");
    }
    if (bps.back().ylift > bps.front().ylift + 1)
      throw MonotoneError("map winds more than once");
    // Anchor the lift so the first image value lies in [0,1).
    Integer shift = rfloor(bps.front().ylift);
    if (shift != 0)
      for (auto& b : bps) b.ylift -= Rational(shift);
    bps_ = std::move(bps);
    normalize();
  }

  // Merges collinear breakpoints so map equality is structural, but never
  // creates a multi-segment map with a full-turn segment (the circle-pair
  // form could not express it back). Rotations canonicalize to a single
  // breakpoint at 0.
  void normalize() {
    bool changed = true;
    while (changed && bps_.size() > 1) {
      changed = false;
      const size_t k = bps_.size();
      for (size_t i = 0; i < k; ++i) {
        // Lifted neighbors of breakpoint i, shifting across the wrap.
        Rational xa = bps_[(i + k - 1) % k].x, ya = bps_[(i + k - 1) % k].ylift;
        if (i == 0) { xa -= 1; ya -= 1; }
        Rational xb = bps_[i].x, yb = bps_[i].ylift;
        Rational xc = bps_[(i + 1) % k].x, yc = bps_[(i + 1) % k].ylift;
        if (i + 1 == k) { xc += 1; yc += 1; }
        if ((yb - ya) * (xc - xb) != (yc - yb) * (xb - xa)) continue;
        if (yc - ya >= 1 && k > 2) continue;  // keep the full-turn witness
        bps_.erase(bps_.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    if (bps_.size() == 1 && bps_[0].x != 0) {
      // A lone breakpoint is a rotation; re-anchor at 0.
      Rational r = mod1(bps_[0].ylift - bps_[0].x);
      bps_[0] = {Rational(0), mod1(r)};
    }
  }

  std::vector<Breakpoint> bps_;
};

// I^- of a fiber: the clockwisemost point.
inline CirclePoint fiber_min(const MonotoneMap::Fiber& f) {
  if (auto* p = std::get_if<CirclePoint>(&f)) return *p;
  return std::get<Arc>(f).clockwise_end();
}

// I^+ of a fiber: the anticlockwisemost point.
inline CirclePoint fiber_max(const MonotoneMap::Fiber& f) {
  if (auto* p = std::get_if<CirclePoint>(&f)) return *p;
  return std::get<Arc>(f).anticlockwise_end();
}

// Image relation {phi(x), phi(y)}; leaves collapsed to a point are dropped
// (the relation is off-diagonal).
inline LaminarRelation pushforward(const MonotoneMap& phi, const LaminarRelation& r) {
  std::set<Chord> out;
  for (const Chord& c : r.leaves()) {
    CirclePoint ia = phi.apply(c.a()), ib = phi.apply(c.b());
    if (ia != ib) out.insert(Chord(ia, ib));
  }
  return LaminarRelation::unchecked(std::move(out));
}

// Minimal pullback: point/point fibers give one leaf, point/arc fibers give
// the two leaves to the arc's extreme endpoints, arc/arc fibers give the two
// crossed extreme leaves {I^+, J^-} and {J^+, I^-}.
inline LaminarRelation pullback_min(const MonotoneMap& phi, const LaminarRelation& r) {
  std::set<Chord> out;
  for (const Chord& c : r.leaves()) {
    MonotoneMap::Fiber fa = phi.preimage(c.a());
    MonotoneMap::Fiber fb = phi.preimage(c.b());
    out.insert(Chord(fiber_max(fa), fiber_min(fb)));
    out.insert(Chord(fiber_max(fb), fiber_min(fa)));
  }
  return LaminarRelation::unchecked(std::move(out));
}

// Maximal pullback: the minimal pullback plus, for every maximal flat K, the
// leaf joining the endpoints of K (the gap-boundary leaves of figure 3).
inline LaminarRelation pullback_max(const MonotoneMap& phi, const LaminarRelation& r) {
  std::set<Chord> out = pullback_min(phi, r).leaves();
  for (const Arc& k : phi.flats())
    out.insert(Chord(k.clockwise_end(), k.anticlockwise_end()));
  return LaminarRelation::unchecked(std::move(out));
}

// Exact composition outer . inner. Breakpoints are inner's breakpoints plus
// the point-fibers of inner over outer's breakpoints.
inline MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  std::set<Rational> xs;
  for (const auto& b : inner.breakpoints()) xs.insert(b.x);
  for (const auto& b : outer.breakpoints()) {
    MonotoneMap::Fiber f = inner.preimage(CirclePoint(b.x));
    if (auto* p = std::get_if<CirclePoint>(&f)) xs.insert(p->value());
    // Arc fibers are flats of inner; their endpoints are already breakpoints.
  }
  std::vector<MonotoneMap::Breakpoint> bps;
  for (const Rational& x : xs)
    bps.push_back({x, outer.lift_at(inner.lift_at(x))});
  return MonotoneMap::from_lifted(std::move(bps));
}

} // namespace laminar
