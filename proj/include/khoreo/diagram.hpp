// Link diagrams as PD codes: parsing, orientation, crossing signs, and the
// basic diagram transforms every other module consumes.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "khoreo/rational.hpp"

namespace khoreo {

using ArcId = int;  // 1-based

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Crossing tuple listed counterclockwise from the incoming under-strand of
// the base orientation.  The under-strand runs 0 -> 2; the over-strand
// occupies ends 1 and 3.
struct Crossing {
  std::array<ArcId, 4> a{};
  int over_in = 1;  // 1 or 3, w.r.t. base orientation
  int sign = 0;     // +1 iff over runs 3 -> 1 (base orientation)
};

// A strand traversal through one crossing: it enters at `pos`, leaves at
// (pos + 2) mod 4.
struct Pass {
  int crossing = -1;
  int pos = -1;
  bool operator==(const Pass& o) const { return crossing == o.crossing && pos == o.pos; }
};

// Closed oriented component.  arcs[k] leads into passes[k]; passes[k] exits
// onto arcs[(k+1) % size].  Crossing-free unknot components have no arcs.
struct Component {
  std::vector<ArcId> arcs;
  std::vector<Pass> passes;
  bool crossingless() const { return arcs.empty(); }
};

class Diagram {
 public:
  Diagram() = default;

  static Diagram parse(const std::string& text);

  // Assembles a diagram from raw tuples (position 0 = incoming under-strand)
  // plus crossing-free unknot components.  orientation_hints are directed
  // arc adjacencies (a, then b) used to orient components that never pass
  // under; everything else is inferred.
  static Diagram from_tuples(std::vector<std::array<ArcId, 4>> tuples, int unknots,
                             const std::vector<std::pair<ArcId, ArcId>>& orientation_hints = {});

  int crossing_count() const { return int(crossings_.size()); }
  int arc_count() const { return n_arcs_; }
  int unknot_components() const { return unknots_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(i); }
  const std::vector<Component>& components() const { return components_; }
  int component_count() const { return int(components_.size()); }
  int component_of_arc(ArcId a) const { return comp_of_arc_.at(a - 1); }
  bool reversed(int comp) const { return rev_.at(comp); }
  const std::vector<bool>& reversal_flags() const { return rev_; }

  // Effective sign of a crossing under the current orientation overlay.
  int sign(int i) const {
    const Crossing& c = crossings_[i];
    bool ur = rev_[comp_of_arc_.at(c.a[0] - 1)];
    bool orv = rev_[comp_of_arc_.at(c.a[1] - 1)];
    return (ur != orv) ? -c.sign : c.sign;
  }

  // (x, y) = (#negative, #positive)
  std::pair<int, int> crossing_counts() const {
    int x = 0, y = 0;
    for (int i = 0; i < crossing_count(); ++i) (sign(i) < 0 ? x : y)++;
    return {x, y};
  }

  // The two ends where arc a attaches, as (crossing, position).
  const std::array<std::pair<int, int>, 2>& arc_ends(ArcId a) const {
    return arc_ends_.at(a - 1);
  }

  // True when the strand through (crossing, pos)-(crossing, pos+2) enters at
  // pos under the effective orientation.
  bool enters_at(int crossing, int pos) const {
    const Crossing& c = crossings_[crossing];
    int base_in = (pos == 0 || pos == 2) ? 0 : c.over_in;
    bool aligned = (pos == base_in);
    bool r = rev_[comp_of_arc_.at(c.a[pos] - 1)];
    return aligned != r;
  }

  Diagram mirrored() const;
  Diagram reoriented(const std::vector<int>& reversed_components) const;
  static Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

  // Symmetric matrix of linking numbers under the effective orientation;
  // entries are half-integers in general, integers for genuine links.
  std::vector<std::vector<Rational>> linking_matrix() const {
    int n = component_count();
    std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < crossing_count(); ++i) {
      const Crossing& c = crossings_[i];
      int cu = comp_of_arc_.at(c.a[0] - 1);
      int co = comp_of_arc_.at(c.a[1] - 1);
      if (cu == co) continue;
      Rational half = Rational(sign(i)) / 2;
      l[cu][co] += half;
      l[co][cu] += half;
    }
    return l;
  }

  // Underlying 4-valent graph connectivity (ignores crossing-free unknots).
  bool graph_connected() const;

  std::string pd_text() const;

 private:
  friend class DiagramSurgeon;
  void finalize(const std::vector<std::pair<ArcId, ArcId>>& hints);
  void validate_planarity() const;

  std::vector<Crossing> crossings_;
  int n_arcs_ = 0;
  int unknots_ = 0;
  std::vector<Component> components_;  // sorted by minimal arc, unknots last
  std::vector<int> comp_of_arc_;
  std::vector<bool> rev_;
  std::vector<std::array<std::pair<int, int>, 2>> arc_ends_;
};

// ---------------------------------------------------------------------------

inline Diagram Diagram::parse(const std::string& text) {
  std::vector<std::array<ArcId, 4>> tuples;
  int unknots = 0;

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };
  auto expect = [&](const std::string& tok) {
    skip_ws();
    if (text.compare(i, tok.size(), tok) != 0)
      throw ParseError("expected '" + tok + "' at offset " + std::to_string(i));
    i += tok.size();
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t j = i;
    while (j < text.size() && std::isdigit(uint8_t(text[j]))) ++j;
    if (j == i) throw ParseError("expected arc label at offset " + std::to_string(i));
    int v = std::stoi(text.substr(i, j - i));
    i = j;
    return v;
  };

  expect("PD");
  expect("[");
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
    throw ParseError("empty PD expression");
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) throw ParseError("unterminated PD expression");
    if (text[i] == 'X') {
      ++i;
      expect("[");
      std::array<ArcId, 4> t{};
      for (int k = 0; k < 4; ++k) {
        t[k] = read_int();
        if (t[k] <= 0) throw ParseError("arc labels must be positive");
        if (k < 3) expect(",");
      }
      expect("]");
      tuples.push_back(t);
    } else if (text[i] == 'U') {
      ++i;
      ++unknots;
    } else {
      throw ParseError(std::string("unexpected token '") + text[i] + "'");
    }
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect("]");
    break;
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing input after PD expression");

  return from_tuples(std::move(tuples), unknots);
}

inline Diagram Diagram::from_tuples(std::vector<std::array<ArcId, 4>> tuples, int unknots,
                                    const std::vector<std::pair<ArcId, ArcId>>& hints) {
  // compact arc labels to 1..2c, preserving relative order
  std::set<ArcId> labels;
  for (auto& t : tuples)
    for (ArcId a : t) labels.insert(a);
  std::map<ArcId, ArcId> remap;
  int next = 1;
  for (ArcId a : labels) remap[a] = next++;

  Diagram d;
  d.unknots_ = unknots;
  d.n_arcs_ = int(labels.size());
  for (auto& t : tuples) {
    Crossing c;
    for (int k = 0; k < 4; ++k) c.a[k] = remap[t[k]];
    d.crossings_.push_back(c);
  }
  std::vector<std::pair<ArcId, ArcId>> h;
  h.reserve(hints.size());
  for (auto& [a, b] : hints) {
    auto ia = remap.find(a), ib = remap.find(b);
    if (ia != remap.end() && ib != remap.end()) h.emplace_back(ia->second, ib->second);
  }
  d.finalize(h);
  return d;
}

inline void Diagram::finalize(const std::vector<std::pair<ArcId, ArcId>>& hints) {
  const int c = crossing_count();
  if (c == 0 && unknots_ == 0) throw ParseError("diagram has no components");
  if (n_arcs_ != 2 * c) throw ParseError("arc label count must be 2c");

  // each arc label must appear exactly twice
  arc_ends_.assign(n_arcs_, {std::make_pair(-1, -1), std::make_pair(-1, -1)});
  std::vector<int> seen(n_arcs_, 0);
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) {
      ArcId a = crossings_[i].a[k];
      if (a < 1 || a > n_arcs_) throw ParseError("arc label out of range");
      if (seen[a - 1] >= 2)
        throw ParseError("arc " + std::to_string(a) + " appears more than twice");
      arc_ends_[a - 1][seen[a - 1]++] = {i, k};
    }
  for (int a = 0; a < n_arcs_; ++a)
    if (seen[a] != 2) throw ParseError("arc " + std::to_string(a + 1) + " appears once");

  // trace components as cycles of (arc, pass)
  std::vector<bool> arc_visited(n_arcs_, false);
  std::vector<Component> comps;
  for (int start = 1; start <= n_arcs_; ++start) {
    if (arc_visited[start - 1]) continue;
    Component comp;
    ArcId a = start;
    auto [e0, e1] = arc_ends_[a - 1];
    std::pair<int, int> head = e0;  // provisional direction: a flows into e0
    while (true) {
      arc_visited[a - 1] = true;
      comp.arcs.push_back(a);
      comp.passes.push_back({head.first, head.second});
      int exit_pos = (head.second + 2) % 4;
      ArcId b = crossings_[head.first].a[exit_pos];
      auto [f0, f1] = arc_ends_[b - 1];
      // b's head is its other end
      head = (f0 == std::make_pair(head.first, exit_pos)) ? f1 : f0;
      a = b;
      if (a == start) break;
      if (arc_visited[a - 1]) throw ParseError("component fails to close");
    }

    // orient: under-passes must enter at position 0
    int fwd = 0, bwd = 0;
    for (const Pass& p : comp.passes) {
      if (p.pos == 0) ++fwd;
      if (p.pos == 2) ++bwd;
    }
    bool flip;
    if (fwd && bwd) throw ParseError("inconsistent strand orientation in PD code");
    if (fwd || bwd) {
      flip = bwd > 0;
    } else {
      // all-over component: orientation hints, then increasing arc labels
      std::optional<bool> hinted;
      for (auto& [u, v] : hints) {
        for (std::size_t k = 0; k < comp.arcs.size(); ++k) {
          if (comp.arcs[k] == u) {
            std::size_t nk = (k + 1) % comp.arcs.size();
            std::size_t pk = (k + comp.arcs.size() - 1) % comp.arcs.size();
            if (comp.arcs[nk] == v) hinted = false;
            else if (comp.arcs[pk] == v) hinted = true;
          }
        }
        if (hinted) break;
      }
      if (hinted) {
        flip = *hinted;
      } else if (comp.arcs.size() == 1) {
        flip = false;
      } else {
        auto mit = std::min_element(comp.arcs.begin(), comp.arcs.end());
        std::size_t k = std::size_t(mit - comp.arcs.begin());
        ArcId succ = comp.arcs[(k + 1) % comp.arcs.size()];
        ArcId pred = comp.arcs[(k + comp.arcs.size() - 1) % comp.arcs.size()];
        flip = pred < succ;
      }
    }
    if (flip) {
      // reversed traversal: passes are entered at their old exit positions
      std::reverse(comp.arcs.begin(), comp.arcs.end());
      std::reverse(comp.passes.begin(), comp.passes.end());
      for (Pass& p : comp.passes) p.pos = (p.pos + 2) % 4;
      if (comp.passes.size() > 1)
        std::rotate(comp.passes.begin(), comp.passes.begin() + 1, comp.passes.end());
    }
    comps.push_back(std::move(comp));
  }

  // normalize anchoring: every under-pass enters at position 0 (a rotation
  // by two preserves the counterclockwise order and both smoothing pairings)
  std::vector<bool> rotated(c, false);
  for (const Component& comp : comps)
    for (const Pass& p : comp.passes)
      if (p.pos == 2) rotated[p.crossing] = true;
  for (int i = 0; i < c; ++i)
    if (rotated[i]) {
      Crossing& cr = crossings_[i];
      cr.a = {cr.a[2], cr.a[3], cr.a[0], cr.a[1]};
    }
  for (Component& comp : comps)
    for (Pass& p : comp.passes)
      if (rotated[p.crossing]) p.pos = (p.pos + 2) % 4;
  for (int a = 0; a < n_arcs_; ++a)
    for (auto& [ci, pi] : arc_ends_[a])
      if (rotated[ci]) pi = (pi + 2) % 4;

  // over-strand directions and signs
  for (Component& comp : comps)
    for (Pass& p : comp.passes) {
      if (p.pos == 0) continue;
      if (p.pos != 1 && p.pos != 3)
        throw ParseError("internal orientation anchoring failure");
      crossings_[p.crossing].over_in = p.pos;
    }
  for (Crossing& cr : crossings_) cr.sign = (cr.over_in == 3) ? 1 : -1;

  // sort components by minimal arc; crossing-free unknots go last
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.arcs.begin(), a.arcs.end()) <
           *std::min_element(b.arcs.begin(), b.arcs.end());
  });
  for (int u = 0; u < unknots_; ++u) comps.push_back(Component{});
  components_ = std::move(comps);

  comp_of_arc_.assign(n_arcs_, -1);
  for (std::size_t ci = 0; ci < components_.size(); ++ci)
    for (ArcId a : components_[ci].arcs) comp_of_arc_[a - 1] = int(ci);

  rev_.assign(components_.size(), false);

  validate_planarity();
}

inline bool Diagram::graph_connected() const {
  int c = crossing_count();
  if (c == 0) return true;
  std::vector<int> stack{0};
  std::vector<bool> vis(c, false);
  vis[0] = true;
  int n = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      ArcId a = crossings_[i].a[k];
      for (auto& [cj, pj] : arc_ends_[a - 1])
        if (!vis[cj]) {
          vis[cj] = true;
          ++n;
          stack.push_back(cj);
        }
    }
  }
  return n == c;
}

inline void Diagram::validate_planarity() const {
  // left-turn face walk; per connected piece, Euler demands c_piece + 2 faces
  int c = crossing_count();
  if (c == 0) return;
  std::vector<bool> used(4 * c, false);  // arrival end (crossing, pos)
  // piece labels via graph flood
  std::vector<int> piece(c, -1);
  int npieces = 0;
  for (int s = 0; s < c; ++s) {
    if (piece[s] >= 0) continue;
    std::vector<int> stack{s};
    piece[s] = npieces;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k)
        for (auto& [cj, pj] : arc_ends_[crossings_[i].a[k] - 1])
          if (piece[cj] < 0) {
            piece[cj] = npieces;
            stack.push_back(cj);
          }
    }
    ++npieces;
  }
  std::vector<int> faces(npieces, 0), csize(npieces, 0);
  for (int i = 0; i < c; ++i) ++csize[piece[i]];
  for (int i = 0; i < c; ++i)
    for (int e = 0; e < 4; ++e) {
      if (used[4 * i + e]) continue;
      ++faces[piece[i]];
      int ci = i, ce = e;
      while (!used[4 * ci + ce]) {
        used[4 * ci + ce] = true;
        int dep = (ce + 3) % 4;
        ArcId a = crossings_[ci].a[dep];
        auto [f0, f1] = arc_ends_[a - 1];
        auto other = (f0 == std::make_pair(ci, dep)) ? f1 : f0;
        ci = other.first;
        ce = other.second;
      }
    }
  for (int p = 0; p < npieces; ++p)
    if (faces[p] != csize[p] + 2)
      throw ParseError("PD code is not planar");
}

inline Diagram Diagram::mirrored() const {
  std::vector<std::array<ArcId, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (const Crossing& c : crossings_) {
    if (c.over_in == 1)
      tuples.push_back({c.a[1], c.a[2], c.a[3], c.a[0]});
    else
      tuples.push_back({c.a[3], c.a[0], c.a[1], c.a[2]});
  }
  std::vector<std::pair<ArcId, ArcId>> hints;
  for (const Component& comp : components_)
    for (std::size_t k = 0; k + 1 < comp.arcs.size(); ++k)
      hints.emplace_back(comp.arcs[k], comp.arcs[k + 1]);
  Diagram m = from_tuples(std::move(tuples), unknots_, hints);
  m.rev_ = rev_;
  return m;
}

inline Diagram Diagram::reoriented(const std::vector<int>& reversed_components) const {
  Diagram d = *this;
  for (int k : reversed_components) {
    if (k < 0 || k >= component_count())
      throw std::invalid_argument("component index out of range");
    d.rev_[k] = !d.rev_[k];
  }
  return d;
}

inline Diagram Diagram::disjoint_union(const Diagram& d1, const Diagram& d2) {
  std::vector<std::array<ArcId, 4>> tuples;
  std::vector<std::pair<ArcId, ArcId>> hints;
  int shift = d1.n_arcs_;
  for (const Crossing& c : d1.crossings_) tuples.push_back(c.a);
  for (const Crossing& c : d2.crossings_) {
    std::array<ArcId, 4> t;
    for (int k = 0; k < 4; ++k) t[k] = c.a[k] + shift;
    tuples.push_back(t);
  }
  for (const Component& comp : d1.components_)
    for (std::size_t k = 0; k + 1 < comp.arcs.size(); ++k)
      hints.emplace_back(comp.arcs[k], comp.arcs[k + 1]);
  for (const Component& comp : d2.components_)
    for (std::size_t k = 0; k + 1 < comp.arcs.size(); ++k)
      hints.emplace_back(comp.arcs[k] + shift, comp.arcs[k + 1] + shift);
  Diagram d = from_tuples(std::move(tuples), d1.unknots_ + d2.unknots_, hints);
  // carry orientation overlays across (components re-sorted by min arc)
  for (int ci = 0; ci < d1.component_count(); ++ci)
    if (d1.rev_[ci] && !d1.components_[ci].crossingless())
      d.rev_[d.comp_of_arc_[d1.components_[ci].arcs[0] - 1]] = true;
  for (int ci = 0; ci < d2.component_count(); ++ci)
    if (d2.rev_[ci] && !d2.components_[ci].crossingless())
      d.rev_[d.comp_of_arc_[d2.components_[ci].arcs[0] + shift - 1]] = true;
  return d;
}

inline std::string Diagram::pd_text() const {
  std::string s = "PD[";
  bool first = true;
  for (const Crossing& c : crossings_) {
    if (!first) s += ",";
    first = false;
    s += "X[" + std::to_string(c.a[0]) + "," + std::to_string(c.a[1]) + "," +
         std::to_string(c.a[2]) + "," + std::to_string(c.a[3]) + "]";
  }
  for (int u = 0; u < unknots_; ++u) {
    if (!first) s += ",";
    first = false;
    s += "U";
  }
  return s + "]";
}

}  // namespace khoreo
