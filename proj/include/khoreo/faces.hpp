// Faces of the diagram on the sphere, checkerboard colorings, and the
// derived diagram predicates (alternating, nonsplit, reduced).
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "khoreo/diagram.hpp"

namespace khoreo {

// Corner k of a crossing is the region between tuple ends k and k+1 (mod 4).
// Opposite corners always receive the same checkerboard color.
enum class CrossingPattern { A, B };

struct FaceSide {
  ArcId arc;
  std::pair<int, int> from;  // departure end (crossing, pos)
  std::pair<int, int> to;    // arrival end
};

struct Face {
  std::vector<std::pair<int, int>> corners;  // (crossing, corner index)
  std::vector<FaceSide> sides;               // sides[k] runs corner k -> k+1
};

struct FaceColoring {
  std::vector<Face> faces;
  std::vector<std::array<int, 2>> face_of_arc;     // faces on the two sides
  std::vector<std::array<int, 4>> corner_face;     // per crossing corner
  std::vector<bool> black;                         // per face
  std::vector<CrossingPattern> pattern;            // per crossing
  bool all_pattern_a = false;
  bool mixed = false;  // both patterns occur (diagram not alternating)
};

// Left-turn face walk: arriving at end e, the boundary departs via end
// (e + 3) mod 4, consuming corner (e + 3) mod 4 on the way.
inline std::vector<Face> compute_faces(const Diagram& d) {
  int c = d.crossing_count();
  std::vector<Face> faces;
  std::vector<bool> used(4 * c, false);
  for (int i = 0; i < c; ++i)
    for (int e = 0; e < 4; ++e) {
      if (used[4 * i + e]) continue;
      Face f;
      int ci = i, ce = e;
      while (!used[4 * ci + ce]) {
        used[4 * ci + ce] = true;
        int dep = (ce + 3) % 4;
        f.corners.push_back({ci, dep});
        ArcId a = d.crossing(ci).a[dep];
        auto [f0, f1] = d.arc_ends(a);
        auto other = (f0 == std::make_pair(ci, dep)) ? f1 : f0;
        f.sides.push_back({a, {ci, dep}, other});
        ci = other.first;
        ce = other.second;
      }
      faces.push_back(std::move(f));
    }
  return faces;
}

// The coloring of a connected diagram.  For an alternating diagram this is
// "the coloring": the one in which only pattern A appears (the 0-resolution
// trace of every crossing lies in a white region).  Otherwise the choice is
// fixed by making face 0 white and the mixed flag is set.
inline FaceColoring faces_and_coloring(const Diagram& d) {
  if (!d.graph_connected() ||
      (d.unknot_components() > 0 && d.crossing_count() > 0) ||
      d.unknot_components() > 1)
    throw std::invalid_argument("faces_and_coloring: diagram is split");

  FaceColoring fc;
  fc.faces = compute_faces(d);
  int c = d.crossing_count();
  int nf = int(fc.faces.size());

  fc.corner_face.assign(c, {-1, -1, -1, -1});
  fc.face_of_arc.assign(d.arc_count(), {-1, -1});
  for (int f = 0; f < nf; ++f) {
    for (auto& [ci, k] : fc.faces[f].corners) fc.corner_face[ci][k] = f;
    for (auto& s : fc.faces[f].sides) {
      auto& fa = fc.face_of_arc[s.arc - 1];
      (fa[0] < 0 ? fa[0] : fa[1]) = f;
    }
  }

  if (c == 0) {
    // a crossingless unknot still divides the sphere into two regions
    fc.faces.assign(2, Face{});
    fc.black = {true, false};
    fc.all_pattern_a = true;
    return fc;
  }

  // checkerboard 2-coloring: faces across an arc get opposite colors
  fc.black.assign(nf, false);
  std::vector<int> color(nf, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const auto& s : fc.faces[f].sides) {
      auto& fa = fc.face_of_arc[s.arc - 1];
      int g = (fa[0] == f) ? fa[1] : fa[0];
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::invalid_argument("faces_and_coloring: no checkerboard coloring");
      }
    }
  }

  // pattern A at a crossing <=> corners 1 and 3 are white; try to realize
  // pattern A everywhere, else default to face 0 white
  auto patterns = [&](bool color0_black) {
    std::vector<CrossingPattern> p(c);
    for (int i = 0; i < c; ++i) {
      bool corner1_black = (color[fc.corner_face[i][1]] == 0) ? color0_black : !color0_black;
      p[i] = corner1_black ? CrossingPattern::B : CrossingPattern::A;
    }
    return p;
  };
  auto all_a = [&](const std::vector<CrossingPattern>& p) {
    for (auto q : p)
      if (q != CrossingPattern::A) return false;
    return true;
  };

  std::vector<CrossingPattern> p0 = patterns(true), p1 = patterns(false);
  bool use_color0_black;
  if (all_a(p0)) {
    use_color0_black = true;
    fc.all_pattern_a = true;
  } else if (all_a(p1)) {
    use_color0_black = false;
    fc.all_pattern_a = true;
  } else {
    use_color0_black = false;  // face 0 white
    fc.mixed = true;
  }
  fc.pattern = use_color0_black ? p0 : p1;
  for (int f = 0; f < nf; ++f)
    fc.black[f] = (color[f] == 0) ? use_color0_black : !use_color0_black;
  return fc;
}

struct DiagramFlags {
  bool alternating = false;
  bool nonsplit = false;
  bool reduced = false;
};

inline DiagramFlags classify(const Diagram& d) {
  DiagramFlags f;

  // alternating: along every component, passes alternate under/over
  f.alternating = true;
  for (const Component& comp : d.components()) {
    int n = int(comp.passes.size());
    for (int k = 0; k < n; ++k) {
      bool under_now = comp.passes[k].pos == 0;
      bool under_next = comp.passes[(k + 1) % n].pos == 0;
      if (n > 1 && under_now == under_next) f.alternating = false;
    }
  }

  int c = d.crossing_count();
  if (c == 0)
    f.nonsplit = (d.unknot_components() == 1);
  else
    f.nonsplit = d.graph_connected() && d.unknot_components() == 0;

  // reduced: no crossing is incident twice to the same face
  f.reduced = true;
  if (c > 0) {
    auto faces = compute_faces(d);
    std::vector<std::array<int, 4>> corner_face(c, {-1, -1, -1, -1});
    for (int fi = 0; fi < int(faces.size()); ++fi)
      for (auto& [ci, k] : faces[fi].corners) corner_face[ci][k] = fi;
    for (int i = 0; i < c; ++i)
      if (corner_face[i][0] == corner_face[i][2] || corner_face[i][1] == corner_face[i][3])
        f.reduced = false;
  }
  return f;
}

}  // namespace khoreo
