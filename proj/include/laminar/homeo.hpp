#pragma once

#include <algorithm>
#include <vector>

#include "laminar/monotone.hpp"

namespace laminar {

// Strictly increasing PL circle homeomorphism: the carrier of group actions
// and dynamics classification. A view over MonotoneMap with no flats allowed,
// exactly invertible by swapping breakpoint coordinates.
class PLCircleHomeo {
 public:
  explicit PLCircleHomeo(const std::vector<std::pair<CirclePoint, CirclePoint>>& pts)
      : map_(pts) {
    require_strict();
  }

  explicit PLCircleHomeo(MonotoneMap m) : map_(std::move(m)) { require_strict(); }

  static PLCircleHomeo identity() { return PLCircleHomeo(MonotoneMap::identity()); }
  static PLCircleHomeo rotation(const Rational& t) {
    return PLCircleHomeo(MonotoneMap::rotation(t));
  }

  const MonotoneMap& as_monotone() const { return map_; }
  const std::vector<MonotoneMap::Breakpoint>& breakpoints() const {
    return map_.breakpoints();
  }

  CirclePoint apply(const CirclePoint& p) const { return map_.apply(p); }
  Rational lift_at(const Rational& t) const { return map_.lift_at(t); }
  bool is_identity() const { return map_.is_identity(); }

  PLCircleHomeo inverse() const {
    std::vector<MonotoneMap::Breakpoint> inv;
    for (const auto& b : map_.breakpoints()) {
      Integer m = rfloor(b.ylift);
      inv.push_back({b.ylift - Rational(m), b.x - Rational(m)});
    }
    std::sort(inv.begin(), inv.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    return PLCircleHomeo(MonotoneMap::from_lifted(std::move(inv)));
  }

  friend PLCircleHomeo compose(const PLCircleHomeo& outer, const PLCircleHomeo& inner) {
    return PLCircleHomeo(compose(outer.map_, inner.map_));
  }

  // f^n for n in Z (n = 0 gives the identity).
  PLCircleHomeo iterate(long long n) const {
    PLCircleHomeo base = n < 0 ? inverse() : *this;
    long long k = n < 0 ? -n : n;
    PLCircleHomeo acc = identity();
    for (long long i = 0; i < k; ++i) acc = compose(base, acc);
    return acc;
  }

  // c . f . c^-1.
  PLCircleHomeo conjugate_by(const PLCircleHomeo& c) const {
    return compose(c, compose(*this, c.inverse()));
  }

  friend bool operator==(const PLCircleHomeo& f, const PLCircleHomeo& g) {
    return f.map_ == g.map_;
  }

 private:
  void require_strict() {
    const auto& bps = map_.breakpoints();
    for (size_t i = 0; i < bps.size(); ++i) {
      Rational xa = bps[i].x, ya = bps[i].ylift;
      Rational xb = i + 1 < bps.size() ? bps[i + 1].x : bps[0].x + 1;
      Rational yb = i + 1 < bps.size() ? bps[i + 1].ylift : bps[0].ylift + 1;
      if (ya >= yb && xa < xb)
        throw MonotoneError("not strictly increasing: flat at x = " +
                            laminar::to_string(xa));
    }
  }

  MonotoneMap map_;
};

inline LaminarRelation pushforward(const PLCircleHomeo& f, const LaminarRelation& r) {
  return pushforward(f.as_monotone(), r);
}

} // namespace laminar
