#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "laminar/circle.hpp"

namespace laminar {

// Finite laminar relations: pairwise-unlinked chord sets together with the
// combinatorics of their complementary regions. Finite sets stand in for the
// paper-level closed relations, so the closure condition holds vacuously and
// only transverse linking is forbidden; chords may share endpoints (polygon
// vertices require them).

class LaminarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LinkedPairError : public LaminarError {
 public:
  LinkedPairError(Chord l1, Chord l2)
      : LaminarError("linked pair " + laminar::to_string(l1) + " / " +
                     laminar::to_string(l2)),
        l1_(std::move(l1)),
        l2_(std::move(l2)) {}
  const Chord& first_leaf() const { return l1_; }
  const Chord& second_leaf() const { return l2_; }

 private:
  Chord l1_, l2_;
};

class EmptyRelationError : public LaminarError {
 public:
  EmptyRelationError() : LaminarError("empty laminar relation") {}
};

class LaminarRelation {
 public:
  LaminarRelation() = default;

  // Validates pairwise unlinkedness; throws LinkedPairError naming the first
  // violating pair in canonical chord order.
  static LaminarRelation validate(const std::set<Chord>& leaves) {
    std::vector<Chord> v(leaves.begin(), leaves.end());
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (linked(v[i], v[j])) throw LinkedPairError(v[i], v[j]);
    LaminarRelation r;
    r.leaves_ = leaves;
    return r;
  }

  static LaminarRelation validate(std::initializer_list<Chord> leaves) {
    return validate(std::set<Chord>(leaves));
  }

  // For relations already known unlinked (images of laminations under
  // monotone maps, canonical constructions). Checked in debug builds.
  static LaminarRelation unchecked(std::set<Chord> leaves) {
    LaminarRelation r;
    r.leaves_ = std::move(leaves);
    return r;
  }

  const std::set<Chord>& leaves() const { return leaves_; }
  size_t size() const { return leaves_.size(); }
  bool empty() const { return leaves_.empty(); }
  bool contains(const Chord& c) const { return leaves_.count(c) > 0; }

  friend bool operator==(const LaminarRelation&, const LaminarRelation&) = default;

 private:
  std::set<Chord> leaves_;
};

inline bool is_sublamination(const LaminarRelation& a, const LaminarRelation& b) {
  return std::includes(b.leaves().begin(), b.leaves().end(), a.leaves().begin(),
                       a.leaves().end());
}

// Set union; throws LinkedPairError if the two families link each other.
inline LaminarRelation merge(const LaminarRelation& a, const LaminarRelation& b) {
  std::set<Chord> u = a.leaves();
  u.insert(b.leaves().begin(), b.leaves().end());
  return LaminarRelation::validate(u);
}

// Boundary of the convex hull of a finite point set: chords joining
// circularly consecutive distinct points. Empty for fewer than two points,
// one chord for two, an n-gon boundary for n >= 3.
inline LaminarRelation hull_boundary(const std::set<CirclePoint>& points) {
  std::vector<CirclePoint> v(points.begin(), points.end());
  std::set<Chord> sides;
  if (v.size() >= 2)
    for (size_t i = 0; i < v.size(); ++i)
      sides.insert(Chord(v[i], v[(i + 1) % v.size()]));
  return LaminarRelation::unchecked(std::move(sides));
}

// One complementary region of the chord diagram: a cyclic boundary walk
// alternating sides (leaves of the parent relation) and free arcs of the
// circle, plus the ideal vertex set.
class Gap {
 public:
  using BoundaryPiece = std::variant<Chord, Arc>;

  Gap(std::vector<BoundaryPiece> boundary, std::vector<CirclePoint> vertices)
      : boundary_(std::move(boundary)), vertices_(std::move(vertices)) {}

  const std::vector<BoundaryPiece>& boundary() const { return boundary_; }
  const std::vector<CirclePoint>& vertices() const { return vertices_; }

  size_t side_count() const {
    size_t n = 0;
    for (const auto& p : boundary_)
      if (std::holds_alternative<Chord>(p)) ++n;
    return n;
  }

  size_t arc_count() const { return boundary_.size() - side_count(); }

  // An ideal polygon has chord sides only; vertex count equals side count.
  bool is_ideal_polygon() const { return arc_count() == 0 && side_count() >= 3; }

  std::vector<Chord> sides() const {
    std::vector<Chord> s;
    for (const auto& p : boundary_)
      if (auto* c = std::get_if<Chord>(&p)) s.push_back(*c);
    return s;
  }

 private:
  std::vector<BoundaryPiece> boundary_;
  std::vector<CirclePoint> vertices_;
};

namespace detail {

// Planar face walk on the chord diagram. Vertices are chord endpoints in
// circular order; edges are the chords plus the circle arcs between
// consecutive vertices. Outgoing half-edges at a vertex are ordered by the
// anticlockwise gap to their target: the forward circle arc first, chords in
// between, the backward circle arc last. Interior faces are the orbits of
//   next(h) = rotation_at_head[(index of twin(h)) - 1]
// and the unique all-arc orbit is the outside of the circle.
struct HalfEdge {
  size_t from, to;   // vertex indices
  bool is_arc;       // circle arc vs chord
  size_t twin;       // index of opposite half-edge
};

} // namespace detail

// The faces of the non-crossing chord diagram in the closed disk, in a
// deterministic order. Face count = leaf count + 1.
inline std::vector<Gap> gaps(const LaminarRelation& rel) {
  if (rel.empty()) {
    return {Gap({Arc::whole_circle()}, {})};
  }

  std::set<CirclePoint> vset;
  for (const Chord& c : rel.leaves()) {
    vset.insert(c.a());
    vset.insert(c.b());
  }
  std::vector<CirclePoint> verts(vset.begin(), vset.end());
  const size_t m = verts.size();
  auto vindex = [&](const CirclePoint& p) {
    return static_cast<size_t>(
        std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };

  std::vector<detail::HalfEdge> hes;
  // Circle arcs between consecutive vertices.
  for (size_t i = 0; i < m; ++i) {
    size_t j = (i + 1) % m;
    size_t fwd = hes.size();
    hes.push_back({i, j, true, fwd + 1});
    hes.push_back({j, i, true, fwd});
  }
  for (const Chord& c : rel.leaves()) {
    size_t ia = vindex(c.a()), ib = vindex(c.b());
    size_t fwd = hes.size();
    hes.push_back({ia, ib, false, fwd + 1});
    hes.push_back({ib, ia, false, fwd});
  }

  // Rotation order of outgoing half-edges at each vertex.
  std::vector<std::vector<size_t>> rot(m);
  for (size_t v = 0; v < m; ++v) {
    std::vector<size_t> out;
    for (size_t h = 0; h < hes.size(); ++h)
      if (hes[h].from == v) out.push_back(h);
    std::sort(out.begin(), out.end(), [&](size_t x, size_t y) {
      // forward arc < chords by gap to target < backward arc; even-indexed
      // arc half-edges are the anticlockwise ones by construction
      auto key = [&](size_t h) -> std::pair<int, Rational> {
        if (hes[h].is_arc)
          return {h % 2 == 0 ? 0 : 2, Rational(0)};
        return {1, arc_length(verts[v], verts[hes[h].to])};
      };
      return key(x) < key(y);
    });
    rot[v] = std::move(out);
  }

  std::vector<size_t> idx_in_rot(hes.size());
  for (size_t v = 0; v < m; ++v)
    for (size_t i = 0; i < rot[v].size(); ++i) idx_in_rot[rot[v][i]] = i;

  auto next = [&](size_t h) {
    size_t tw = hes[h].twin;
    const auto& r = rot[hes[tw].from];
    size_t i = idx_in_rot[tw];
    return r[(i + r.size() - 1) % r.size()];
  };

  std::vector<Gap> out;
  std::vector<bool> seen(hes.size(), false);
  for (size_t h0 = 0; h0 < hes.size(); ++h0) {
    if (seen[h0]) continue;
    std::vector<size_t> cycle;
    size_t h = h0;
    do {
      seen[h] = true;
      cycle.push_back(h);
      h = next(h);
    } while (h != h0);

    bool all_arcs = std::all_of(cycle.begin(), cycle.end(),
                                [&](size_t e) { return hes[e].is_arc; });
    if (all_arcs) continue;  // outside of the circle

    std::vector<Gap::BoundaryPiece> boundary;
    std::vector<CirclePoint> gverts;
    for (size_t e : cycle) {
      const auto& he = hes[e];
      if (he.is_arc)
        boundary.emplace_back(Arc(verts[he.from], verts[he.to]));
      else
        boundary.emplace_back(Chord(verts[he.from], verts[he.to]));
      if (std::find(gverts.begin(), gverts.end(), verts[he.from]) == gverts.end())
        gverts.push_back(verts[he.from]);
    }
    out.emplace_back(std::move(boundary), std::move(gverts));
  }
  return out;
}

// Distance between two leaves: optimal endpoint pairing under the max of
// circular distances.
inline Rational chord_distance(const Chord& x, const Chord& y) {
  Rational straight = rmax(circular_distance(x.a(), y.a()),
                           circular_distance(x.b(), y.b()));
  Rational crossed = rmax(circular_distance(x.a(), y.b()),
                          circular_distance(x.b(), y.a()));
  return rmin(straight, crossed);
}

// Symmetric Hausdorff distance between the leaf sets. Exact; a pseudometric
// realizing the paper's convergence statements on finite truncations.
inline Rational hausdorff_distance(const LaminarRelation& a,
                                   const LaminarRelation& b) {
  if (a.empty() || b.empty()) throw EmptyRelationError();
  auto directed = [](const LaminarRelation& from, const LaminarRelation& to) {
    Rational worst(0);
    for (const Chord& x : from.leaves()) {
      std::optional<Rational> best;
      for (const Chord& y : to.leaves()) {
        Rational d = chord_distance(x, y);
        if (!best || d < *best) best = d;
      }
      worst = rmax(worst, *best);
    }
    return worst;
  };
  return rmax(directed(a, b), directed(b, a));
}

} // namespace laminar
