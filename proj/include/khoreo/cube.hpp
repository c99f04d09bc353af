// The cube of resolutions: one resolution per state, signed merge/split
// edges between adjacent states.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "khoreo/resolution.hpp"

namespace khoreo {

inline constexpr int kDefaultCrossingCap = 16;

class Cube {
 public:
  explicit Cube(const Diagram& d, int max_crossings = kDefaultCrossingCap) : d_(d) {
    int c = d.crossing_count();
    if (c > max_crossings)
      throw CapExceeded("crossing limit exceeded: " + std::to_string(c) + " > " +
                        std::to_string(max_crossings));
    resolutions_.reserve(std::size_t(1) << c);
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << c); ++s)
      resolutions_.push_back(resolve(d, State{s}));
  }

  const Diagram& diagram() const { return d_; }
  int crossings() const { return d_.crossing_count(); }
  std::size_t vertex_count() const { return resolutions_.size(); }
  std::size_t edge_count() const { return (resolutions_.size() * crossings()) / 2; }

  const Resolution& resolution(State s) const { return resolutions_[s.bits]; }

  // Sign for adding crossing k to state s: parity of the number of chosen
  // crossings after k in the fixed ordering, realizing the permutation rule.
  static int edge_sign(State s, int k) {
    return (__builtin_popcount(s.bits >> (k + 1)) & 1) ? -1 : 1;
  }

  struct Edge {
    State from, to;
    int crossing;
    int sign;
    bool is_merge;
    int src1, src2;  // merging source circles; for a split src2 == src1
    int dst1, dst2;  // split target circles; for a merge dst2 == dst1
    std::vector<int> circle_map;  // source circle -> target circle;
                                  // merging sources both map to dst1
  };

  Edge edge(State s, int k) const {
    if (s.resolved_to_one(k)) throw std::invalid_argument("edge: crossing already 1");
    Edge e;
    e.from = s;
    e.to = State{s.bits | (std::uint32_t(1) << k)};
    e.crossing = k;
    e.sign = edge_sign(s, k);

    const Resolution& src = resolutions_[e.from.bits];
    const Resolution& dst = resolutions_[e.to.bits];
    auto [c1, c2] = src.crossing_circles[k];
    e.is_merge = (c1 != c2);

    int na_src = 0, na_dst = 0;
    for (const auto& c : src.circles)
      if (!c.empty()) ++na_src;
    for (const auto& c : dst.circles)
      if (!c.empty()) ++na_dst;

    e.circle_map.assign(src.n_circles(), -1);
    for (int i = 0; i < src.n_circles(); ++i) {
      if (i >= na_src) {  // crossing-free unknot circles keep their slots
        e.circle_map[i] = na_dst + (i - na_src);
        continue;
      }
      e.circle_map[i] = dst.circle_of_arc[src.circles[i][0] - 1];
    }

    if (e.is_merge) {
      e.src1 = c1;
      e.src2 = c2;
      e.dst1 = e.dst2 = e.circle_map[c1];
    } else {
      e.src1 = e.src2 = c1;
      auto [t1, t2] = dst.crossing_circles[k];
      e.dst1 = std::min(t1, t2);
      e.dst2 = std::max(t1, t2);
      e.circle_map[c1] = -1;  // the split source has no single image
    }
    return e;
  }

 private:
  Diagram d_;
  std::vector<Resolution> resolutions_;
};

inline Cube build_cube(const Diagram& d, int max_crossings = kDefaultCrossingCap) {
  return Cube(d, max_crossings);
}

}  // namespace khoreo
