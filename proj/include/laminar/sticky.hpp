#pragma once

#include <set>
#include <string>
#include <vector>

#include "laminar/lamination.hpp"

namespace laminar {

// Finite truncation of the infinite-valent-tree lamination: every tree edge
// is thickened to the diagonal of an ideal quadrilateral whose four sides are
// leaves, and the quadrilaterals of the edges at a vertex accumulate at that
// vertex's ideal point. The truncation keeps arity_cap children per vertex,
// placed at dyadic parameters of the parent's fan arc in circular order.

struct StickyLamination {
  LaminarRelation relation;
  std::vector<CirclePoint> vertex_points;           // all tree vertices
  std::vector<CirclePoint> internal_vertex_points;  // vertices with children
  size_t edge_count = 0;
};

namespace detail {

// First `count` dyadics of (0,1) in construction order (1/2; 1/4, 3/4; ...),
// returned sorted increasingly.
inline std::vector<Rational> dyadic_slots(size_t count) {
  std::vector<Rational> out;
  for (Integer level = 2; out.size() < count; level *= 2)
    for (Integer k = 1; k < level && out.size() < count; k += 2)
      out.emplace_back(k, level);
  std::sort(out.begin(), out.end());
  return out;
}

struct StickyBuilder {
  int arity;
  std::set<Chord> leaves;
  std::vector<CirclePoint> vertices;
  std::vector<CirclePoint> internal_vertices;
  size_t edges = 0;

  // Vertex at `apex` with fan arc (apex, apex + fan_len); children
  // quadrilaterals subdivide the fan by dyadic slots.
  void grow(const CirclePoint& apex, const Rational& fan_len, int levels_left) {
    vertices.push_back(apex);
    if (levels_left == 0) return;
    internal_vertices.push_back(apex);
    std::vector<Rational> slots = dyadic_slots(static_cast<size_t>(arity));
    slots.push_back(Rational(1));
    for (int j = 0; j < arity; ++j) {
      Rational lo = slots[static_cast<size_t>(j)];
      Rational width = slots[static_cast<size_t>(j) + 1] - lo;
      auto at = [&](const Rational& u) {
        return CirclePoint(apex.value() + fan_len * (lo + width * u));
      };
      CirclePoint c1 = at(rational(1, 4));
      CirclePoint child = at(rational(1, 2));
      CirclePoint c2 = at(rational(3, 4));
      leaves.insert(Chord(apex, c1));
      leaves.insert(Chord(c1, child));
      leaves.insert(Chord(child, c2));
      leaves.insert(Chord(c2, apex));
      ++edges;
      // child's fan is the lune between its point and its far corner
      grow(child, fan_len * width / 4, levels_left - 1);
    }
  }
};

} // namespace detail

inline StickyLamination sticky_build(int n_levels, int arity_cap) {
  if (n_levels < 1) throw LaminarError("sticky_build: n_levels must be >= 1");
  if (arity_cap < 2) throw LaminarError("sticky_build: arity_cap must be >= 2");
  detail::StickyBuilder b;
  b.arity = arity_cap;
  b.grow(CirclePoint(), Rational(1), n_levels);
  StickyLamination out;
  out.relation = LaminarRelation::validate(b.leaves);
  out.vertex_points = std::move(b.vertices);
  out.internal_vertex_points = std::move(b.internal_vertices);
  out.edge_count = b.edges;
  return out;
}

// Finite-scale sticky evidence: leaves l = {p, q} such that at least
// min_chain other leaves share the endpoint p and have their free endpoints
// inside the open anticlockwise arc from p to q, hence converging
// monotonically toward q in circular order. (The reversed-order convention
// would scan the clockwise arc instead.)
inline std::vector<std::pair<Chord, CirclePoint>> sticky_detect(
    const LaminarRelation& rel, int min_chain) {
  if (min_chain < 2) throw LaminarError("sticky_detect: min_chain must be >= 2");
  std::vector<std::pair<Chord, CirclePoint>> out;
  for (const Chord& l : rel.leaves()) {
    for (const CirclePoint& p : {l.a(), l.b()}) {
      const CirclePoint& q = l.other_endpoint(p);
      Arc toward(p, q);
      int chain = 0;
      for (const Chord& other : rel.leaves()) {
        if (other == l || !other.has_endpoint(p)) continue;
        if (in_open_arc(other.other_endpoint(p), toward)) ++chain;
      }
      if (chain >= min_chain) out.emplace_back(l, p);
    }
  }
  return out;
}

} // namespace laminar
