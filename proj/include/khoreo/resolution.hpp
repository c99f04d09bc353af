// Complete resolutions of a diagram: one circle set per 0/1 state.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "khoreo/diagram.hpp"

namespace khoreo {

// Subset of crossings resolved to 1; bit k is crossing k.
struct State {
  std::uint32_t bits = 0;
  bool resolved_to_one(int crossing) const { return (bits >> crossing) & 1u; }
  int weight() const { return __builtin_popcount(bits); }
  bool operator==(const State& o) const { return bits == o.bits; }
};

// The 0-smoothing joins ends (0,1) and (2,3); the 1-smoothing joins (0,3)
// and (1,2).  For a positive crossing the 0-smoothing is the oriented one.
inline int smoothing_partner(int pos, bool one_smoothing) {
  static constexpr int zero[4] = {1, 0, 3, 2};
  static constexpr int one[4] = {3, 2, 1, 0};
  return one_smoothing ? one[pos] : zero[pos];
}

struct Resolution {
  // Circles sorted by minimal arc; arcs listed in cyclic walk order starting
  // from the minimal arc.  Crossing-free unknot components come last with an
  // empty arc list.
  std::vector<std::vector<ArcId>> circles;
  std::vector<int> circle_of_arc;                 // arc-1 -> circle index
  std::vector<std::pair<int, int>> crossing_circles;  // per crossing: circles
                                                      // of the joins at ends
                                                      // {0,...} and {2 or 1}
  int n_circles() const { return int(circles.size()); }
};

inline Resolution resolve(const Diagram& d, State s) {
  const int c = d.crossing_count();
  const int n = d.arc_count();

  // union-find over arcs; a smoothing join identifies the two arc segments
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  for (int i = 0; i < c; ++i) {
    const auto& a = d.crossing(i).a;
    bool one = s.resolved_to_one(i);
    unite(a[0], a[smoothing_partner(0, one)]);
    unite(a[2], a[smoothing_partner(2, one)]);
  }

  // minimal arc per class determines circle order
  std::vector<ArcId> min_arc(n + 1, 0);
  for (ArcId a = 1; a <= n; ++a) {
    int r = find(a);
    if (min_arc[r] == 0 || a < min_arc[r]) min_arc[r] = a;
  }
  std::vector<ArcId> reps;
  for (ArcId a = 1; a <= n; ++a)
    if (find(a) == a) reps.push_back(min_arc[a]);
  std::sort(reps.begin(), reps.end());

  Resolution res;
  res.circle_of_arc.assign(n, -1);
  std::vector<int> circle_of_rep(n + 1, -1);
  for (std::size_t k = 0; k < reps.size(); ++k) circle_of_rep[find(reps[k])] = int(k);
  for (ArcId a = 1; a <= n; ++a) res.circle_of_arc[a - 1] = circle_of_rep[find(a)];

  // walk each circle in cyclic order starting at its minimal arc
  res.circles.assign(reps.size(), {});
  for (std::size_t k = 0; k < reps.size(); ++k) {
    ArcId start = reps[k];
    ArcId a = start;
    auto head = d.arc_ends(a)[0];
    do {
      res.circles[k].push_back(a);
      // turn at the smoothed crossing, leave via the partner end
      bool one = s.resolved_to_one(head.first);
      int dep = smoothing_partner(head.second, one);
      ArcId b = d.crossing(head.first).a[dep];
      auto [f0, f1] = d.arc_ends(b);
      head = (f0 == std::make_pair(head.first, dep)) ? f1 : f0;
      a = b;
    } while (a != start);
  }

  for (int u = 0; u < d.unknot_components(); ++u) res.circles.push_back({});

  res.crossing_circles.resize(c);
  for (int i = 0; i < c; ++i) {
    const auto& a = d.crossing(i).a;
    bool one = s.resolved_to_one(i);
    int first = res.circle_of_arc[a[0] - 1];
    int second = res.circle_of_arc[a[one ? 1 : 2] - 1];
    res.crossing_circles[i] = {first, second};
  }
  return res;
}

// Circle count of the all-zero resolution.
inline int o_count(const Diagram& d) { return resolve(d, State{0}).n_circles(); }

}  // namespace khoreo
