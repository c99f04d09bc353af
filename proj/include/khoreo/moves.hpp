// Reidemeister moves as local PD surgeries, plus nugatory-crossing
// reduction.  Faces and arcs in a MoveSpec refer to compute_faces() and the
// arc labels of the diagram the move is applied to.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "khoreo/faces.hpp"

namespace khoreo {

enum class MoveType { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

struct MoveSpec {
  MoveType type = MoveType::R1Plus;
  int arc = 0;      // R1Plus / R2Plus target arc (0 when unknot >= 0)
  int unknot = -1;  // crossing-free component index for R1Plus / R2Plus
  int crossing = -1;  // R1Minus kink crossing
  int face = -1;      // R2Plus / R2Minus / R3 face id
  int side_a = 0, side_b = 0;  // R2Plus side indices within the face walk
  bool over_first = false;     // R2Plus: pushed strand passes over
  int variant = 0;             // R1Plus: bit0 loop side, bit1 over-first
};

namespace detail {

// Working copy of a diagram under local surgery.  Arc merges run through a
// min-label union-find; closing a chain into a crossing-free loop turns it
// into an unknot component.
class DiagramSurgeon {
 public:
  explicit DiagramSurgeon(const Diagram& d)
      : base_(d), unknots_(d.unknot_components()), next_arc_(d.arc_count() + 1) {
    for (const Crossing& c : d.crossings()) tuples_.push_back(c.a);
    dead_.assign(tuples_.size(), false);
    rep_.resize(d.arc_count() + 1);
    for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] = int(i);
  }

  ArcId fresh_arc() {
    rep_.push_back(next_arc_);
    return next_arc_++;
  }

  const std::array<ArcId, 4>& tuple(int i) const { return tuples_.at(i); }
  void set_end(int crossing, int pos, ArcId a) { tuples_.at(crossing)[pos] = a; }
  void kill(int crossing) { dead_.at(crossing) = true; }
  void add_crossing(const std::array<ArcId, 4>& t) { new_tuples_.push_back(t); }
  void add_unknot() { ++unknots_; }
  void remove_unknot() {
    if (unknots_ == 0) throw std::invalid_argument("no unknot component to consume");
    --unknots_;
  }
  void add_hint(ArcId a, ArcId b) { extra_hints_.emplace_back(a, b); }

  void merge_arcs(ArcId x, ArcId y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) {
      ++unknots_;  // the strand closed into a crossing-free circle
      return;
    }
    if (rx > ry) std::swap(rx, ry);
    rep_[ry] = rx;
  }

  Diagram rebuild() {
    std::vector<std::array<ArcId, 4>> out;
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
      if (dead_[i]) continue;
      std::array<ArcId, 4> t;
      for (int k = 0; k < 4; ++k) t[k] = find(tuples_[i][k]);
      out.push_back(t);
    }
    for (auto& t : new_tuples_) {
      std::array<ArcId, 4> m;
      for (int k = 0; k < 4; ++k) m[k] = find(t[k]);
      out.push_back(m);
    }

    std::vector<std::pair<ArcId, ArcId>> hints;
    for (auto& [a, b] : extra_hints_) hints.emplace_back(find(a), find(b));
    // surviving passes keep their entry ends, so their arc adjacency is a
    // valid orientation hint
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
      if (dead_[i]) continue;
      hints.emplace_back(find(tuples_[i][0]), find(tuples_[i][2]));
      int oi = base_.crossing(int(i)).over_in;
      hints.emplace_back(find(tuples_[i][oi]), find(tuples_[i][(oi + 2) % 4]));
    }

    Diagram result = Diagram::from_tuples(out, unknots_, hints);

    // carry orientation overlays to the surviving components
    if (result.crossing_count() > 0) {
      // label compaction mirrors from_tuples: sorted live labels -> 1..2c
      std::set<ArcId> live;
      for (auto& t : out)
        for (ArcId a : t) live.insert(a);
      std::map<ArcId, ArcId> compact;
      int next = 1;
      for (ArcId a : live) compact[a] = next++;
      std::vector<int> reversed;
      for (int ci = 0; ci < base_.component_count(); ++ci) {
        if (!base_.reversed(ci) || base_.components()[ci].crossingless()) continue;
        for (ArcId a : base_.components()[ci].arcs) {
          auto it = compact.find(find(a));
          if (it != compact.end()) {
            reversed.push_back(result.component_of_arc(it->second));
            break;
          }
        }
      }
      std::sort(reversed.begin(), reversed.end());
      reversed.erase(std::unique(reversed.begin(), reversed.end()), reversed.end());
      result = result.reoriented(reversed);
    }
    return result;
  }

 private:
  int find(int x) {
    while (rep_[x] != x) x = rep_[x] = rep_[rep_[x]];
    return x;
  }

  const Diagram& base_;
  std::vector<std::array<ArcId, 4>> tuples_;
  std::vector<bool> dead_;
  std::vector<std::array<ArcId, 4>> new_tuples_;
  std::vector<std::pair<ArcId, ArcId>> extra_hints_;
  int unknots_;
  int next_arc_;
  std::vector<int> rep_;
};

// Strand direction ignoring orientation overlays: does it enter at pos?
inline bool enters_at_base(const Diagram& d, int crossing, int pos) {
  if (pos == 0) return true;
  if (pos == 2) return false;
  return pos == d.crossing(crossing).over_in;
}

// An arc's head: the end its strand flows into (base orientation).
inline std::pair<int, int> arc_head(const Diagram& d, ArcId a) {
  auto [e0, e1] = d.arc_ends(a);
  return enters_at_base(d, e0.first, e0.second) ? e0 : e1;
}
inline std::pair<int, int> arc_tail(const Diagram& d, ArcId a) {
  auto [e0, e1] = d.arc_ends(a);
  return enters_at_base(d, e0.first, e0.second) ? e1 : e0;
}

inline bool side_walk_aligned(const Diagram& d, const FaceSide& s) {
  return enters_at_base(d, s.to.first, s.to.second);
}

}  // namespace detail

inline Diagram apply_r1_plus(const Diagram& d, int arc, int unknot, int variant) {
  detail::DiagramSurgeon s(d);
  bool loop_right = variant & 1;
  bool over_first = variant & 2;

  ArcId in_arc, out_arc;
  ArcId loop = s.fresh_arc();
  if (unknot >= 0) {
    s.remove_unknot();
    in_arc = out_arc = s.fresh_arc();
  } else {
    if (arc < 1 || arc > d.arc_count()) throw std::invalid_argument("R1+: no such arc");
    in_arc = arc;
    out_arc = s.fresh_arc();
    auto head = detail::arc_head(d, arc);
    s.set_end(head.first, head.second, out_arc);
  }

  std::array<ArcId, 4> t;
  if (!over_first)
    t = loop_right ? std::array<ArcId, 4>{in_arc, loop, loop, out_arc}
                   : std::array<ArcId, 4>{in_arc, out_arc, loop, loop};
  else
    t = loop_right ? std::array<ArcId, 4>{loop, loop, out_arc, in_arc}
                   : std::array<ArcId, 4>{loop, in_arc, out_arc, loop};
  s.add_crossing(t);
  s.add_hint(in_arc, loop);
  s.add_hint(loop, out_arc);
  return s.rebuild();
}

inline Diagram apply_r1_minus(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw std::invalid_argument("R1-: no such crossing");
  const auto& t = d.crossing(crossing).a;
  // a kink carries its loop arc on two ends
  int la = -1, lb = -1;
  for (int i = 0; i < 4 && la < 0; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (t[i] == t[j]) {
        la = i;
        lb = j;
        break;
      }
  if (la < 0) throw std::invalid_argument("R1-: crossing is not a kink");
  std::array<bool, 4> is_loop{};
  is_loop[la] = is_loop[lb] = true;
  std::vector<ArcId> outer;
  for (int i = 0; i < 4; ++i)
    if (!is_loop[i]) outer.push_back(t[i]);

  detail::DiagramSurgeon s(d);
  s.kill(crossing);
  s.merge_arcs(outer[0], outer[1]);
  return s.rebuild();
}

inline Diagram apply_r2_plus(const Diagram& d, const MoveSpec& spec) {
  detail::DiagramSurgeon s(d);

  ArcId alpha, beta, a2, b2, m, n;
  bool alpha_aligned, beta_aligned;

  if (spec.unknot >= 0) {
    // clasp a floating circle over/under the target arc
    if (spec.arc < 1 || spec.arc > d.arc_count())
      throw std::invalid_argument("R2+: no such arc");
    s.remove_unknot();
    alpha = spec.arc;
    a2 = s.fresh_arc();
    m = s.fresh_arc();
    n = s.fresh_arc();
    beta = b2 = s.fresh_arc();
    auto head = detail::arc_head(d, alpha);
    s.set_end(head.first, head.second, a2);
    alpha_aligned = true;
    beta_aligned = true;
  } else {
    auto faces = compute_faces(d);
    if (spec.face < 0 || spec.face >= int(faces.size()))
      throw std::invalid_argument("R2+: no such face");
    const Face& f = faces[spec.face];
    int ns = int(f.sides.size());
    if (spec.side_a < 0 || spec.side_a >= ns || spec.side_b < 0 || spec.side_b >= ns ||
        spec.side_a == spec.side_b)
      throw std::invalid_argument("R2+: invalid side pair");
    const FaceSide& sa = f.sides[spec.side_a];
    const FaceSide& sb = f.sides[spec.side_b];
    if (sa.arc == sb.arc)
      throw std::invalid_argument("R2+: sides must lie on distinct arcs");

    alpha = sa.arc;
    beta = sb.arc;
    a2 = s.fresh_arc();
    b2 = s.fresh_arc();
    m = s.fresh_arc();
    n = s.fresh_arc();
    s.set_end(sa.to.first, sa.to.second, a2);
    s.set_end(sb.to.first, sb.to.second, b2);
    alpha_aligned = detail::side_walk_aligned(d, sa);
    beta_aligned = detail::side_walk_aligned(d, sb);
  }

  // counterclockwise templates: K_L = (alpha, n, m, b2), K_R = (a2, beta, m, n);
  // the anchor rotates to the under-strand's entering end
  auto anchored = [](std::array<ArcId, 4> cyc, int under_in_idx) {
    std::array<ArcId, 4> t;
    for (int k = 0; k < 4; ++k) t[k] = cyc[(under_in_idx + k) % 4];
    return t;
  };
  std::array<ArcId, 4> kl{alpha, n, m, b2};
  std::array<ArcId, 4> kr{a2, beta, m, n};
  if (spec.over_first) {  // pushed strand (alpha) passes over both crossings
    s.add_crossing(anchored(kl, beta_aligned ? 1 : 3));
    s.add_crossing(anchored(kr, beta_aligned ? 1 : 3));
  } else {  // alpha passes under
    s.add_crossing(anchored(kl, alpha_aligned ? 0 : 2));
    s.add_crossing(anchored(kr, alpha_aligned ? 2 : 0));
  }

  if (alpha_aligned) {
    s.add_hint(alpha, m);
    s.add_hint(m, a2);
  } else {
    s.add_hint(a2, m);
    s.add_hint(m, alpha);
  }
  if (beta_aligned) {
    s.add_hint(beta, n);
    s.add_hint(n, b2);
  } else {
    s.add_hint(b2, n);
    s.add_hint(n, beta);
  }
  return s.rebuild();
}

inline Diagram apply_r2_minus(const Diagram& d, int face) {
  auto faces = compute_faces(d);
  if (face < 0 || face >= int(faces.size())) throw std::invalid_argument("R2-: no such face");
  const Face& f = faces[face];
  if (f.sides.size() != 2) throw std::invalid_argument("R2-: face is not a bigon");
  int k1 = f.corners[0].first, k2 = f.corners[1].first;
  if (k1 == k2) throw std::invalid_argument("R2-: bigon corners coincide");
  const FaceSide& sm = f.sides[0];
  const FaceSide& sn = f.sides[1];
  if (sm.arc == sn.arc) throw std::invalid_argument("R2-: degenerate bigon");

  // one strand must pass over at both crossings
  auto is_over = [](int pos) { return pos == 1 || pos == 3; };
  bool m_over_k1 = is_over(sm.from.second);
  bool m_over_k2 = is_over(sm.to.second);
  if (m_over_k1 != m_over_k2)
    throw std::invalid_argument("R2-: bigon is clasped, not removable");

  detail::DiagramSurgeon s(d);
  const auto& t1 = d.crossing(k1).a;
  const auto& t2 = d.crossing(k2).a;
  ArcId u1 = t1[(sm.from.second + 2) % 4];
  ArcId u2 = t2[(sm.to.second + 2) % 4];
  ArcId v2 = t2[(sn.from.second + 2) % 4];
  ArcId v1 = t1[(sn.to.second + 2) % 4];
  s.kill(k1);
  s.kill(k2);
  s.merge_arcs(u1, u2);
  s.merge_arcs(v1, v2);
  return s.rebuild();
}

inline Diagram apply_r3(const Diagram& d, int face) {
  auto faces = compute_faces(d);
  if (face < 0 || face >= int(faces.size())) throw std::invalid_argument("R3: no such face");
  const Face& f = faces[face];
  if (f.sides.size() != 3) throw std::invalid_argument("R3: face is not a triangle");
  std::array<int, 3> xs{f.corners[0].first, f.corners[1].first, f.corners[2].first};
  if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2])
    throw std::invalid_argument("R3: triangle corners coincide");
  std::array<ArcId, 3> arcs{f.sides[0].arc, f.sides[1].arc, f.sides[2].arc};
  if (arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2])
    throw std::invalid_argument("R3: triangle sides coincide");

  // heights must be transitive: corner t relates sides t-1 (arriving) and t
  auto is_over = [](int pos) { return pos == 1 || pos == 3; };
  // over_rel[i][j] = side i passes over side j at their shared corner
  int wins[3] = {0, 0, 0};
  for (int t = 0; t < 3; ++t) {
    int arriving = (t + 2) % 3;
    int departing = t;
    bool arriving_over = is_over(f.sides[arriving].to.second);
    wins[arriving_over ? arriving : departing]++;
  }
  // a transitive tournament has scores {0, 1, 2}; the cyclic one has {1,1,1}
  if (wins[0] == 1 && wins[1] == 1 && wins[2] == 1)
    throw std::invalid_argument("R3: cyclic over/under pattern admits no move");

  detail::DiagramSurgeon s(d);
  struct Rewire {
    int crossing, pos;
    ArcId arc;
  };
  std::vector<Rewire> writes;
  for (int t = 0; t < 3; ++t) {
    const FaceSide& side = f.sides[t];
    int X = side.from.first, pX = side.from.second;
    int Y = side.to.first, pY = side.to.second;
    int qX = (pX + 2) % 4, qY = (pY + 2) % 4;
    ArcId u = d.crossing(X).a[qX];
    ArcId v = d.crossing(Y).a[qY];
    // the side arc flips to the opposite ends; the outer arcs trade places
    writes.push_back({X, pX, v});
    writes.push_back({X, qX, side.arc});
    writes.push_back({Y, pY, u});
    writes.push_back({Y, qY, side.arc});
  }
  for (const Rewire& w : writes) s.set_end(w.crossing, w.pos, w.arc);
  return s.rebuild();
}

// Repeatedly flattens crossings incident twice to the same face: at such a
// crossing the diagram is a join of two tangles, and rotating one of them
// removes the crossing without changing the link.
inline Diagram reduce_nugatory(const Diagram& d) {
  Diagram cur = d;
  bool changed = true;
  while (changed && cur.crossing_count() > 0) {
    changed = false;
    auto faces = compute_faces(cur);
    std::vector<std::array<int, 4>> corner_face(cur.crossing_count(), {-1, -1, -1, -1});
    for (int fi = 0; fi < int(faces.size()); ++fi)
      for (auto& [ci, k] : faces[fi].corners) corner_face[ci][k] = fi;
    for (int i = 0; i < cur.crossing_count(); ++i) {
      if (corner_face[i][0] != corner_face[i][2] && corner_face[i][1] != corner_face[i][3])
        continue;
      detail::DiagramSurgeon s(cur);
      const auto& t = cur.crossing(i).a;
      s.kill(i);
      s.merge_arcs(t[0], t[2]);
      s.merge_arcs(t[1], t[3]);
      cur = s.rebuild();
      changed = true;
      break;
    }
  }
  return cur;
}

inline Diagram apply_reidemeister(const Diagram& d, const MoveSpec& spec) {
  switch (spec.type) {
    case MoveType::R1Plus:
      return apply_r1_plus(d, spec.arc, spec.unknot, spec.variant);
    case MoveType::R1Minus:
      return apply_r1_minus(d, spec.crossing);
    case MoveType::R2Plus:
      return apply_r2_plus(d, spec);
    case MoveType::R2Minus:
      return apply_r2_minus(d, spec.face);
    case MoveType::R3:
      return apply_r3(d, spec.face);
  }
  throw std::invalid_argument("unknown move type");
}

// All applicable moves, optionally filtered by whether they grow the diagram.
inline std::vector<MoveSpec> enumerate_moves(const Diagram& d, bool increasing,
                                             bool non_increasing) {
  std::vector<MoveSpec> out;
  if (increasing) {
    for (ArcId a = 1; a <= d.arc_count(); ++a)
      for (int v = 0; v < 4; ++v) {
        MoveSpec m;
        m.type = MoveType::R1Plus;
        m.arc = a;
        m.variant = v;
        out.push_back(m);
      }
    for (int u = 0; u < d.unknot_components(); ++u)
      for (int v = 0; v < 4; ++v) {
        MoveSpec m;
        m.type = MoveType::R1Plus;
        m.unknot = u;
        m.variant = v;
        out.push_back(m);
      }
  }

  auto faces = compute_faces(d);

  if (increasing) {
    for (int fi = 0; fi < int(faces.size()); ++fi) {
      int ns = int(faces[fi].sides.size());
      for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b) {
          if (a == b || faces[fi].sides[a].arc == faces[fi].sides[b].arc) continue;
          for (bool over : {false, true}) {
            MoveSpec m;
            m.type = MoveType::R2Plus;
            m.face = fi;
            m.side_a = a;
            m.side_b = b;
            m.over_first = over;
            out.push_back(m);
          }
        }
    }
    if (d.unknot_components() > 0)
      for (ArcId a = 1; a <= d.arc_count(); ++a)
        for (bool over : {false, true}) {
          MoveSpec m;
          m.type = MoveType::R2Plus;
          m.unknot = 0;
          m.arc = a;
          m.over_first = over;
          out.push_back(m);
        }
  }

  if (non_increasing) {
    for (int i = 0; i < d.crossing_count(); ++i) {
      const auto& t = d.crossing(i).a;
      bool kink = t[0] == t[1] || t[0] == t[2] || t[0] == t[3] || t[1] == t[2] ||
                  t[1] == t[3] || t[2] == t[3];
      if (kink) {
        MoveSpec m;
        m.type = MoveType::R1Minus;
        m.crossing = i;
        out.push_back(m);
      }
    }
    for (int fi = 0; fi < int(faces.size()); ++fi) {
      const Face& f = faces[fi];
      if (f.sides.size() == 2) {
        if (f.corners[0].first == f.corners[1].first) continue;
        if (f.sides[0].arc == f.sides[1].arc) continue;
        auto is_over = [](int pos) { return pos == 1 || pos == 3; };
        if (is_over(f.sides[0].from.second) != is_over(f.sides[0].to.second)) continue;
        MoveSpec m;
        m.type = MoveType::R2Minus;
        m.face = fi;
        out.push_back(m);
      }
      if (f.sides.size() == 3) {
        std::array<int, 3> xs{f.corners[0].first, f.corners[1].first, f.corners[2].first};
        std::array<ArcId, 3> arcs{f.sides[0].arc, f.sides[1].arc, f.sides[2].arc};
        if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) continue;
        if (arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2]) continue;
        auto is_over = [](int pos) { return pos == 1 || pos == 3; };
        int wins[3] = {0, 0, 0};
        for (int t = 0; t < 3; ++t) {
          int arriving = (t + 2) % 3;
          bool arriving_over = is_over(f.sides[arriving].to.second);
          wins[arriving_over ? arriving : t]++;
        }
        if (wins[0] == 1 && wins[1] == 1 && wins[2] == 1) continue;
        MoveSpec m;
        m.type = MoveType::R3;
        m.face = fi;
        out.push_back(m);
      }
    }
  }
  return out;
}

}  // namespace khoreo
