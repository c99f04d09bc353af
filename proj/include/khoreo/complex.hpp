// Chain groups, differentials, and bigraded homology of the cube for any of
// the three local packages.
#pragma once

#include <atomic>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khoreo/cube.hpp"
#include "khoreo/frobenius.hpp"
#include "khoreo/laurent.hpp"
#include "khoreo/linalg.hpp"
#include "khoreo/util.hpp"

namespace khoreo {

struct ChainGenerator {
  State state;
  std::uint32_t labeling = 0;  // bit per circle: 0 = first basis symbol
};

struct Bidegree {
  int i = 0;
  int j = 0;
  bool operator==(const Bidegree& o) const { return i == o.i && j == o.j; }
};

struct BigradedTable {
  std::map<std::pair<int, int>, std::size_t> ranks;

  std::size_t rank(int i, int j) const {
    auto it = ranks.find({i, j});
    return it == ranks.end() ? 0 : it->second;
  }
  void set(int i, int j, std::size_t r) {
    if (r > 0) ranks[{i, j}] = r;
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [k, v] : ranks) t += v;
    return t;
  }
  BigradedTable reflected() const {  // (i, j) -> (-i, -j)
    BigradedTable t;
    for (auto& [k, v] : ranks) t.ranks[{-k.first, -k.second}] = v;
    return t;
  }
  BigradedTable convolved(const BigradedTable& o) const {
    BigradedTable t;
    for (auto& [k1, v1] : ranks)
      for (auto& [k2, v2] : o.ranks)
        t.ranks[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
    return t;
  }
  bool operator==(const BigradedTable& o) const { return ranks == o.ranks; }
};

// Chain groups at one unshifted homological degree.
struct DegreeBasis {
  std::vector<State> states;    // ascending bitmask, fixed weight
  std::vector<int> offsets;     // generator offset per state
  std::vector<int> qdeg;        // per generator: unshifted q-degree
  std::vector<int> n_circles;   // per state
  int total = 0;

  int index_of(State s, std::uint32_t labeling) const {
    auto it = std::lower_bound(states.begin(), states.end(), s.bits,
                               [](const State& a, std::uint32_t b) { return a.bits < b; });
    return offsets[it - states.begin()] + int(labeling);
  }
};

class KhovanovComplex {
 public:
  KhovanovComplex(const Diagram& d, const FrobeniusData& f,
                  int max_crossings = kDefaultCrossingCap)
      : cube_(d, max_crossings), f_(f) {
    auto [x, y] = d.crossing_counts();
    x_ = x;
    y_ = y;
    int c = d.crossing_count();
    bases_.resize(c + 1);
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << c); ++s) {
      int w = __builtin_popcount(s);
      bases_[w].states.push_back(State{s});
    }
    for (int i = 0; i <= c; ++i) {
      DegreeBasis& b = bases_[i];
      b.offsets.reserve(b.states.size());
      for (State s : b.states) {
        b.offsets.push_back(b.total);
        int k = cube_.resolution(s).n_circles();
        b.n_circles.push_back(k);
        for (std::uint32_t l = 0; l < (std::uint32_t(1) << k); ++l) {
          int deg = 0;
          for (int t = 0; t < k; ++t) deg += f_.q_degree[(l >> t) & 1u];
          b.qdeg.push_back(deg + i);  // the {-i} shift makes j = deg + |J|
        }
        b.total += 1 << k;
      }
    }
    matrices_.resize(c + 1);
  }

  const Cube& cube() const { return cube_; }
  const FrobeniusData& frobenius() const { return f_; }
  int x() const { return x_; }
  int y() const { return y_; }
  int top_degree() const { return cube_.crossings(); }
  const DegreeBasis& basis(int i_bar) const { return bases_.at(i_bar); }

  Bidegree shifted(int i_bar, int j_bar) const {
    return {i_bar - x_, j_bar - 2 * x_ + y_};
  }
  int unshift_i(int i) const { return i + x_; }

  // Differential from degree i_bar to i_bar + 1.
  const SparseRationalMatrix& differential(int i_bar) const {
    auto& slot = matrices_.at(i_bar);
    if (slot) return *slot;
    slot = assemble(i_bar);
    return *slot;
  }

  // d(d(x)) must vanish; a failure means a broken sign rule.
  void assert_d_squared_zero() const {
    for (int i = 0; i + 2 <= top_degree(); ++i) {
      auto prod = differential(i + 1).multiply(differential(i));
      if (!prod.is_zero())
        throw std::logic_error("d^2 != 0 for " + f_.name + " complex");
    }
  }

 private:
  std::optional<SparseRationalMatrix> assemble(int i_bar) const {
    const DegreeBasis& src = bases_.at(i_bar);
    const DegreeBasis& dst = bases_.at(i_bar + 1);
    std::vector<std::tuple<int, int, Rational>> trip;
    const int c = cube_.crossings();
    for (std::size_t si = 0; si < src.states.size(); ++si) {
      State s = src.states[si];
      int k = src.n_circles[si];
      for (int cr = 0; cr < c; ++cr) {
        if (s.resolved_to_one(cr)) continue;
        Cube::Edge e = cube_.edge(s, cr);
        for (std::uint32_t l = 0; l < (std::uint32_t(1) << k); ++l) {
          int col = src.offsets[si] + int(l);
          // image labeling bits for untouched circles
          std::uint32_t base = 0;
          for (int t = 0; t < k; ++t) {
            if (e.circle_map[t] < 0 || t == e.src1 || t == e.src2) continue;
            base |= ((l >> t) & 1u) << e.circle_map[t];
          }
          if (e.is_merge) {
            int key = (int((l >> e.src1) & 1u) << 1) | int((l >> e.src2) & 1u);
            for (auto& [sym, coeff] : f_.merge[key]) {
              std::uint32_t out = base | (std::uint32_t(sym) << e.dst1);
              trip.emplace_back(dst.index_of(e.to, out), col, Rational(coeff * e.sign));
            }
          } else {
            int u = int((l >> e.src1) & 1u);
            for (auto& [pair, coeff] : f_.split[u]) {
              std::uint32_t out = base | (std::uint32_t(pair.first) << e.dst1) |
                                  (std::uint32_t(pair.second) << e.dst2);
              trip.emplace_back(dst.index_of(e.to, out), col, Rational(coeff * e.sign));
            }
          }
        }
      }
    }
    return SparseRationalMatrix::from_triplets(dst.total, src.total, trip);
  }

  Cube cube_;
  const FrobeniusData& f_;
  int x_ = 0, y_ = 0;
  std::vector<DegreeBasis> bases_;
  mutable std::vector<std::optional<SparseRationalMatrix>> matrices_;
};

// --- spec-facing helpers -----------------------------------------------------

inline std::vector<std::pair<ChainGenerator, Bidegree>> chain_basis(
    const Diagram& d, int i, bool shifted, const FrobeniusData& f = khovanov_frobenius(),
    int max_crossings = kDefaultCrossingCap) {
  KhovanovComplex cx(d, f, max_crossings);
  int i_bar = shifted ? cx.unshift_i(i) : i;
  std::vector<std::pair<ChainGenerator, Bidegree>> out;
  if (i_bar < 0 || i_bar > cx.top_degree()) return out;
  const DegreeBasis& b = cx.basis(i_bar);
  int g = 0;
  for (std::size_t si = 0; si < b.states.size(); ++si)
    for (std::uint32_t l = 0; l < (std::uint32_t(1) << b.n_circles[si]); ++l, ++g) {
      Bidegree deg = shifted ? cx.shifted(i_bar, b.qdeg[g]) : Bidegree{i_bar, b.qdeg[g]};
      out.push_back({ChainGenerator{b.states[si], l}, deg});
    }
  return out;
}

inline SparseRationalMatrix differential_matrix(const Diagram& d, const FrobeniusData& f,
                                                int i_bar,
                                                int max_crossings = kDefaultCrossingCap) {
  KhovanovComplex cx(d, f, max_crossings);
  return cx.differential(i_bar);
}

// Ranks of the q-degree blocks of the differentials; blocks are independent
// rank jobs.  Returns r[i_bar][j_bar].
inline std::map<std::pair<int, int>, std::size_t> block_ranks(const KhovanovComplex& cx,
                                                              int jobs) {
  struct Block {
    int i_bar, j_bar;
    std::size_t r = 0;
  };
  std::vector<Block> blocks;
  const int top = cx.top_degree();
  for (int i = 0; i < top; ++i) {
    std::set<int> qs(cx.basis(i).qdeg.begin(), cx.basis(i).qdeg.end());
    for (int q : qs) blocks.push_back({i, q});
  }
  std::vector<std::size_t> result(blocks.size());
  parallel_for(int(blocks.size()), jobs, [&](int bi) {
    int i = blocks[bi].i_bar, q = blocks[bi].j_bar;
    const DegreeBasis& src = cx.basis(i);
    const DegreeBasis& dst = cx.basis(i + 1);
    std::vector<int> col_of(src.total, -1), row_of(dst.total, -1);
    int nc = 0, nr = 0;
    for (int g = 0; g < src.total; ++g)
      if (src.qdeg[g] == q) col_of[g] = nc++;
    for (int g = 0; g < dst.total; ++g)
      if (dst.qdeg[g] == q) row_of[g] = nr++;
    const SparseRationalMatrix& m = cx.differential(i);
    std::vector<std::tuple<int, int, Rational>> trip;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (row_of[r] < 0) continue;
      for (const auto& [c, v] : m.row(r))
        if (col_of[c] >= 0) trip.emplace_back(row_of[r], col_of[c], v);
    }
    result[bi] = rank(SparseRationalMatrix::from_triplets(nr, nc, trip));
  });
  std::map<std::pair<int, int>, std::size_t> out;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    out[{blocks[bi].i_bar, blocks[bi].j_bar}] = result[bi];
  return out;
}

// Bigraded homology table of (C(D), d) for a q-graded package.  The global
// [x]{2x - y} shift is applied here, never inside the cube.
inline BigradedTable homology_table(const Diagram& d, const FrobeniusData& f,
                                    int max_crossings = kDefaultCrossingCap, int jobs = 0) {
  if (!f.q_graded)
    throw std::invalid_argument("homology_table: package is not q-graded; use lee_homology");
  KhovanovComplex cx(d, f, max_crossings);
  // differentials materialize up front so rank jobs only read
  for (int i = 0; i < cx.top_degree(); ++i) cx.differential(i);
  cx.assert_d_squared_zero();
  auto ranks = block_ranks(cx, resolve_job_count(jobs));
  auto rk = [&](int i, int q) -> std::size_t {
    auto it = ranks.find({i, q});
    return it == ranks.end() ? 0 : it->second;
  };
  BigradedTable t;
  for (int i = 0; i <= cx.top_degree(); ++i) {
    std::map<int, std::size_t> dims;
    for (int q : cx.basis(i).qdeg) ++dims[q];
    for (auto& [q, dim] : dims) {
      std::size_t r_out = (i < cx.top_degree()) ? rk(i, q) : 0;
      std::size_t r_in = (i > 0) ? rk(i - 1, q) : 0;
      std::size_t h = dim - r_out - r_in;
      auto [si, sj] = cx.shifted(i, q);
      t.set(si, sj, h);
    }
  }
  return t;
}

inline LaurentPoly2 kh_polynomial(const BigradedTable& t) {
  LaurentPoly2 p;
  for (auto& [k, v] : t.ranks) p.add(k.first, k.second, std::int64_t(v));
  return p;
}

}  // namespace khoreo
