#pragma once

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "laminar/homeo.hpp"

namespace laminar {

// Dynamics of PL circle homeomorphisms: exact fixed-point data, rotation
// numbers, the topologically pseudo-Anosov classification with dual polygons,
// orbit closures of laminations under group actions, and the rotation-number
// coboundary.

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SegmentOfFixedPointsError : public DynamicsError {
 public:
  explicit SegmentOfFixedPointsError(const CirclePoint& at)
      : DynamicsError("map fixes a whole arc near " + laminar::to_string(at)),
        at_(at) {}
  const CirclePoint& where() const { return at_; }

 private:
  CirclePoint at_;
};

// Side dynamics at a fixed point, decided by the exact sign of f(x) - x on
// punctured one-sided neighborhoods. The semi-attracting kinds name the side
// that is attracted (clockwise / anticlockwise).
enum class FixedPointKind {
  Attracting,
  Repelling,
  SemiAttractingCW,
  SemiAttractingCCW,
};

struct FixedPointData {
  std::vector<std::pair<CirclePoint, FixedPointKind>> points;  // circular order

  size_t count() const { return points.size(); }
  bool empty() const { return points.empty(); }

  bool alternating_attract_repel() const {
    if (points.size() < 2 || points.size() % 2 != 0) return false;
    for (size_t i = 0; i < points.size(); ++i) {
      FixedPointKind a = points[i].second;
      FixedPointKind b = points[(i + 1) % points.size()].second;
      bool ok = (a == FixedPointKind::Attracting && b == FixedPointKind::Repelling) ||
                (a == FixedPointKind::Repelling && b == FixedPointKind::Attracting);
      if (!ok) return false;
    }
    return true;
  }

  std::vector<CirclePoint> of_kind(FixedPointKind k) const {
    std::vector<CirclePoint> out;
    for (const auto& [p, kind] : points)
      if (kind == k) out.push_back(p);
    return out;
  }
};

// Exact per-segment solution of f(x) = x with side-dynamics kinds. Throws
// SegmentOfFixedPointsError if f fixes an arc pointwise without being the
// identity; the identity itself is the caller's special case.
inline FixedPointData fixed_points(const PLCircleHomeo& f) {
  if (f.is_identity()) return {};
  const auto& bps = f.breakpoints();
  const size_t k = bps.size();
  std::set<Rational> sols;

  for (size_t i = 0; i < k; ++i) {
    Rational xa = bps[i].x, ya = bps[i].ylift;
    Rational xb = i + 1 < k ? bps[i + 1].x : bps[0].x + 1;
    Rational yb = i + 1 < k ? bps[i + 1].ylift : bps[0].ylift + 1;
    // Solve ya + s(t - xa) = t + n for integers n in the displacement range.
    Rational da = ya - xa, db = yb - xb;
    Integer nlo = rceil(rmin(da, db)), nhi = rfloor(rmax(da, db));
    for (Integer n = nlo; n <= nhi; ++n) {
      if (da == db) {
        if (da == Rational(n)) {
          if (xb - xa < 1) throw SegmentOfFixedPointsError(CirclePoint(xa));
          // slope-1 full-turn segment of a rotation: handled as identity above
        }
        continue;
      }
      // t = xa + (n - da) * (xb - xa) / (db - da), valid if within [xa, xb]
      Rational t = xa + (Rational(n) - da) * (xb - xa) / (db - da);
      if (t >= xa && t <= xb) sols.insert(mod1(t));
    }
  }

  // Displacement sign on the two sides of p: the segment slopes decide.
  auto side_slope = [&](const Rational& p, bool right) -> Rational {
    // slope of f immediately to the right (or left) of circle point p
    Rational x0 = bps[0].x;
    Rational t = x0 + mod1(p - x0);  // p lifted into [x0, x0+1)
    size_t i = 0;
    for (size_t j = 0; j < k; ++j) {
      Rational xa = bps[j].x;
      Rational xb = j + 1 < k ? bps[j + 1].x : bps[0].x + 1;
      if (t >= xa && t < xb) { i = j; break; }
    }
    if (!right && t == bps[i].x) i = (i + k - 1) % k;
    Rational xa = bps[i].x, ya = bps[i].ylift;
    Rational xb = i + 1 < k ? bps[i + 1].x : bps[0].x + 1;
    Rational yb = i + 1 < k ? bps[i + 1].ylift : bps[0].ylift + 1;
    return (yb - ya) / (xb - xa);
  };

  FixedPointData out;
  for (const Rational& p : sols) {
    Rational sr = side_slope(p, true), sl = side_slope(p, false);
    if (sr == 1 || sl == 1) throw SegmentOfFixedPointsError(CirclePoint(p));
    bool right_neg = sr < 1;  // f(x) < x just anticlockwise of p
    bool left_pos = sl < 1;   // f(x) > x just clockwise of p
    FixedPointKind kind;
    if (left_pos && right_neg) kind = FixedPointKind::Attracting;
    else if (!left_pos && !right_neg) kind = FixedPointKind::Repelling;
    else if (left_pos) kind = FixedPointKind::SemiAttractingCW;
    else kind = FixedPointKind::SemiAttractingCCW;
    out.points.emplace_back(CirclePoint(p), kind);
  }
  return out;
}

struct RotationInterval {
  Rational lo, hi;  // certified bounds from max_period iterates of the lift
  friend bool operator==(const RotationInterval&, const RotationInterval&) = default;
};

using RotationResult = std::variant<Rational, RotationInterval>;

inline bool resolved(const RotationResult& r) {
  return std::holds_alternative<Rational>(r);
}

// Exact rational rotation number if f has a periodic orbit of period at most
// max_period (detected by solving f^q(x) = x + p exactly); otherwise certified
// interval bounds. Never a float, never false exactness.
inline RotationResult rotation_number(const PLCircleHomeo& f, int max_period) {
  if (max_period < 1) throw DynamicsError("max_period must be at least 1");
  PLCircleHomeo g = f;
  std::optional<std::pair<Rational, Rational>> last_range;
  for (int q = 1; q <= max_period; ++q) {
    if (q > 1) g = compose(f, g);
    // Displacement range of the lift of f^q over one period.
    Rational lo, hi;
    bool first = true;
    for (const auto& b : g.breakpoints()) {
      Rational d = b.ylift - b.x;
      if (first) { lo = hi = d; first = false; }
      else { lo = rmin(lo, d); hi = rmax(hi, d); }
    }
    last_range = {lo / q, hi / q};
    for (Integer p = rceil(lo); p <= rfloor(hi); ++p)
      return Rational(mod1(Rational(p, Integer(q))));
  }
  return RotationInterval{last_range->first, last_range->second};
}

struct LinkWitness {
  std::string word;
  Chord new_leaf;
  Chord conflicting_leaf;
  LinkWitness(std::string w, Chord a, Chord b)
      : word(std::move(w)), new_leaf(std::move(a)), conflicting_leaf(std::move(b)) {}
};

using OrbitResult = std::variant<LaminarRelation, LinkWitness>;

// Union of the images of seed under all generator words of length <= depth,
// with unlinkedness checked after every insertion (the finite-scale check of
// the orbit-closure disjointness lemma). Words are explored in length-lex
// order over the alphabet [generators..., inverses...], so a violation is
// reported at the least violating word. Generator names a,b,... use the
// matching uppercase letter for the inverse; letters of a word apply left to
// right.
inline OrbitResult orbit_closure(const std::vector<std::pair<std::string, PLCircleHomeo>>& generators,
                                 const LaminarRelation& seed, int depth) {
  if (depth < 0) throw DynamicsError("depth must be nonnegative");
  std::set<Chord> acc;

  struct Letter {
    std::string name;
    PLCircleHomeo map;
  };
  std::vector<Letter> letters;
  for (const auto& [name, g] : generators) letters.push_back({name, g});
  for (const auto& [name, g] : generators) {
    std::string up = name;
    for (char& ch : up) ch = static_cast<char>(std::toupper(ch));
    letters.push_back({up, g.inverse()});
  }

  auto insert_all = [&](const PLCircleHomeo& w, const std::string& word)
      -> std::optional<LinkWitness> {
    for (const Chord& c : seed.leaves()) {
      Chord img(w.apply(c.a()), w.apply(c.b()));
      if (acc.count(img)) continue;
      for (const Chord& prev : acc)
        if (linked(img, prev)) return LinkWitness(word.empty() ? "e" : word, img, prev);
      acc.insert(img);
    }
    return std::nullopt;
  };

  if (auto w = insert_all(PLCircleHomeo::identity(), "")) return *w;
  std::vector<std::pair<std::string, PLCircleHomeo>> frontier{{"", PLCircleHomeo::identity()}};
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::pair<std::string, PLCircleHomeo>> next;
    for (const auto& [word, map] : frontier) {
      for (const Letter& l : letters) {
        std::string w2 = word.empty() ? l.name : word + " " + l.name;
        PLCircleHomeo m2 = compose(l.map, map);  // appended letter acts last
        if (auto w = insert_all(m2, w2)) return *w;
        next.emplace_back(w2, m2);
      }
    }
    frontier = std::move(next);
  }
  return LaminarRelation::unchecked(std::move(acc));
}

struct DynamicsClass {
  enum class Kind {
    Identity,
    FixedPointFree,
    MobiusLike,
    PseudoAnosovLike,
    ParabolicLike,
    Unclassified,
  };
  Kind kind = Kind::Identity;
  std::optional<RotationResult> rotation;  // set for FixedPointFree
  FixedPointData fixed;
};

inline const char* to_string(DynamicsClass::Kind k) {
  switch (k) {
    case DynamicsClass::Kind::Identity: return "Identity";
    case DynamicsClass::Kind::FixedPointFree: return "FixedPointFree";
    case DynamicsClass::Kind::MobiusLike: return "MobiusLike";
    case DynamicsClass::Kind::PseudoAnosovLike: return "PseudoAnosovLike";
    case DynamicsClass::Kind::ParabolicLike: return "ParabolicLike";
    case DynamicsClass::Kind::Unclassified: return "Unclassified";
  }
  return "?";
}

// PseudoAnosovLike requires at least 4 fixed points, an even count, strictly
// alternating attracting/repelling; MobiusLike exactly one attractor and one
// repeller; ParabolicLike exactly one semi-attracting point. Everything else
// with fixed points is Unclassified, a first-class answer for finite PL
// actions outside the paper's dichotomy.
inline DynamicsClass classify(const PLCircleHomeo& f, int rotation_max_period = 24) {
  DynamicsClass out;
  if (f.is_identity()) {
    out.kind = DynamicsClass::Kind::Identity;
    return out;
  }
  out.fixed = fixed_points(f);
  if (out.fixed.empty()) {
    out.kind = DynamicsClass::Kind::FixedPointFree;
    out.rotation = rotation_number(f, rotation_max_period);
    return out;
  }
  const auto& pts = out.fixed.points;
  auto is_semi = [](FixedPointKind k) {
    return k == FixedPointKind::SemiAttractingCW || k == FixedPointKind::SemiAttractingCCW;
  };
  if (pts.size() == 1 && is_semi(pts[0].second)) {
    out.kind = DynamicsClass::Kind::ParabolicLike;
  } else if (pts.size() == 2 &&
             ((pts[0].second == FixedPointKind::Attracting &&
               pts[1].second == FixedPointKind::Repelling) ||
              (pts[0].second == FixedPointKind::Repelling &&
               pts[1].second == FixedPointKind::Attracting))) {
    out.kind = DynamicsClass::Kind::MobiusLike;
  } else if (pts.size() >= 4 && out.fixed.alternating_attract_repel()) {
    out.kind = DynamicsClass::Kind::PseudoAnosovLike;
  } else {
    out.kind = DynamicsClass::Kind::Unclassified;
  }
  return out;
}

class NotPseudoAnosovError : public DynamicsError {
 public:
  NotPseudoAnosovError() : DynamicsError("map is not PseudoAnosovLike") {}
};
class RepellingSetMismatchError : public DynamicsError {
 public:
  RepellingSetMismatchError()
      : DynamicsError("vertex set is not the repelling fixed set") {}
};
class InterleavingViolationError : public DynamicsError {
 public:
  InterleavingViolationError()
      : DynamicsError("attracting points do not interleave the polygon vertices") {}
};

// The dual polygon: vertices the attracting fixed points of f, verified to
// interleave the repelling vertex set P with exactly one attractor per
// complementary interval.
inline std::vector<CirclePoint> dual_polygon(const PLCircleHomeo& f,
                                             const std::set<CirclePoint>& P) {
  DynamicsClass c = classify(f);
  if (c.kind != DynamicsClass::Kind::PseudoAnosovLike) throw NotPseudoAnosovError();
  std::vector<CirclePoint> rep = c.fixed.of_kind(FixedPointKind::Repelling);
  if (std::set<CirclePoint>(rep.begin(), rep.end()) != P)
    throw RepellingSetMismatchError();
  std::vector<CirclePoint> att = c.fixed.of_kind(FixedPointKind::Attracting);
  for (size_t i = 0; i < rep.size(); ++i) {
    Arc gap(rep[i], rep[(i + 1) % rep.size()]);
    size_t inside = 0;
    for (const CirclePoint& a : att)
      if (in_open_arc(a, gap)) ++inside;
    if (inside != 1) throw InterleavingViolationError();
  }
  return att;
}

class UnresolvedRotationNumberError : public DynamicsError {
 public:
  UnresolvedRotationNumberError()
      : DynamicsError("a required rotation number resolved only to an interval") {}
};

// Coboundary of the homogeneous 1-cochain s(g,h) = rot(g^-1 h), evaluated
// mod 1: ds(g,h,k) = s(h,k) - s(g,k) + s(g,h). Vanishes when rot restricts
// to a homomorphism (e.g. on rotation subgroups).
inline Rational rotation_cocycle(const PLCircleHomeo& g, const PLCircleHomeo& h,
                                 const PLCircleHomeo& k, int max_period) {
  auto s = [&](const PLCircleHomeo& a, const PLCircleHomeo& b) {
    RotationResult r = rotation_number(compose(a.inverse(), b), max_period);
    if (!resolved(r)) throw UnresolvedRotationNumberError();
    return std::get<Rational>(r);
  };
  return mod1(s(h, k) - s(g, k) + s(g, h));
}

} // namespace laminar
