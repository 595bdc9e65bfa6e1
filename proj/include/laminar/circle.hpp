#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "laminar/rational.hpp"

namespace laminar {

// Exact points, arcs and chords of the circle R/Z. A point is a rational in
// [0,1); arcs are oriented anticlockwise; a chord is an unordered pair of
// distinct points. Linking of chords is decided exactly, which makes every
// law built on top of it (unlinkedness of laminations, pullback round trips,
// cocycle identities) an exact equality rather than a tolerance check.

class CirclePoint {
 public:
  CirclePoint() : value_(0) {}
  explicit CirclePoint(Rational r) : value_(mod1(std::move(r))) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Point advanced anticlockwise by t (mod 1).
  CirclePoint rotated(const Rational& t) const { return CirclePoint(value_ + t); }

 private:
  Rational value_;
};

inline CirclePoint point(long long p, long long q = 1) {
  return CirclePoint(rational(p, q));
}

inline std::string to_string(const CirclePoint& p) { return to_string(p.value()); }

// Anticlockwise circular gap from a to b, in [0,1).
inline Rational arc_length(const CirclePoint& a, const CirclePoint& b) {
  return mod1(b.value() - a.value());
}

// min(|a-b|, 1-|a-b|): length of the shorter arc between a and b.
inline Rational circular_distance(const CirclePoint& a, const CirclePoint& b) {
  Rational d = arc_length(a, b);
  return rmin(d, Rational(1) - d);
}

enum class Orientation { Positive, Negative, Degenerate };

// Positive iff b lies in the open anticlockwise arc from a to c (all three
// distinct); Degenerate iff any two coincide.
inline Orientation cyclic_order(const CirclePoint& a, const CirclePoint& b,
                                const CirclePoint& c) {
  if (a == b || b == c || a == c) return Orientation::Degenerate;
  return arc_length(a, b) < arc_length(a, c) ? Orientation::Positive
                                             : Orientation::Negative;
}

// Closed anticlockwise arc from start to end. start == end is the degenerate
// single-point arc; the full circle is representable only via whole_circle().
class Arc {
 public:
  Arc(CirclePoint start, CirclePoint end)
      : start_(std::move(start)), end_(std::move(end)), whole_(false) {}

  static Arc whole_circle() {
    Arc a{CirclePoint(), CirclePoint()};
    a.whole_ = true;
    return a;
  }

  const CirclePoint& start() const { return start_; }
  const CirclePoint& end() const { return end_; }
  bool is_whole_circle() const { return whole_; }
  bool is_degenerate() const { return !whole_ && start_ == end_; }

  // Anticlockwisemost endpoint (the paper's I^+ is the far end of the arc).
  const CirclePoint& anticlockwise_end() const { return end_; }
  // Clockwisemost endpoint I^-.
  const CirclePoint& clockwise_end() const { return start_; }

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  CirclePoint start_, end_;
  bool whole_;
};

// Exact membership in the open arc; endpoints excluded. The whole circle is
// open in itself; a degenerate arc has empty interior.
inline bool in_open_arc(const CirclePoint& p, const Arc& a) {
  if (a.is_whole_circle()) return true;
  if (a.is_degenerate()) return false;
  return cyclic_order(a.start(), p, a.end()) == Orientation::Positive;
}

inline bool in_closed_arc(const CirclePoint& p, const Arc& a) {
  if (a.is_whole_circle()) return true;
  return p == a.start() || p == a.end() || in_open_arc(p, a);
}

// Unordered pair of distinct circle points: a leaf of a laminar relation.
// Stored with the lesser rational first so equality is structural.
class Chord {
 public:
  Chord(CirclePoint a, CirclePoint b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_)
      throw std::invalid_argument("degenerate chord: " + laminar::to_string(a_));
    if (b_ < a_) std::swap(a_, b_);
  }

  const CirclePoint& a() const { return a_; }
  const CirclePoint& b() const { return b_; }

  bool has_endpoint(const CirclePoint& p) const { return p == a_ || p == b_; }

  // The endpoint that is not p; precondition: p is an endpoint.
  const CirclePoint& other_endpoint(const CirclePoint& p) const {
    return p == a_ ? b_ : a_;
  }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend std::strong_ordering operator<=>(const Chord& x, const Chord& y) {
    auto c = x.a_ <=> y.a_;
    return c != 0 ? c : x.b_ <=> y.b_;
  }

 private:
  CirclePoint a_, b_;
};

inline Chord chord(long long pa, long long qa, long long pb, long long qb) {
  return Chord(CirclePoint(rational(pa, qa)), CirclePoint(rational(pb, qb)));
}

inline std::string to_string(const Chord& c) {
  return "{" + to_string(c.a()) + ", " + to_string(c.b()) + "}";
}

enum class ChordRelation { Equal, SharedEndpoint, Disjoint, Linked };

// Linked iff the endpoint pairs alternate around the circle, i.e. exactly one
// endpoint of l2 lies in each open arc cut out by l1.
inline ChordRelation chords_relate(const Chord& l1, const Chord& l2) {
  if (l1 == l2) return ChordRelation::Equal;
  int shared = (l1.has_endpoint(l2.a()) ? 1 : 0) + (l1.has_endpoint(l2.b()) ? 1 : 0);
  if (shared > 0) return ChordRelation::SharedEndpoint;
  Arc side(l1.a(), l1.b());
  return in_open_arc(l2.a(), side) != in_open_arc(l2.b(), side)
             ? ChordRelation::Linked
             : ChordRelation::Disjoint;
}

inline bool linked(const Chord& l1, const Chord& l2) {
  return chords_relate(l1, l2) == ChordRelation::Linked;
}

} // namespace laminar
