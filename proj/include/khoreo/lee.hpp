// The deformed theory: homology of Phi + d, canonical generators from
// orientations, the linking-number prediction, and the action induced by
// Phi on the undeformed homology.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "khoreo/complex.hpp"

namespace khoreo {

// Components (by index, 0-based) whose orientation is reversed relative to
// the given one.  Component 0 stays fixed: orientations are relative.
struct OrientationSubset {
  std::vector<int> reversed;

  static OrientationSubset from_mask(std::uint32_t mask, int n_components) {
    OrientationSubset e;
    for (int k = 1; k < n_components; ++k)
      if ((mask >> (k - 1)) & 1u) e.reversed.push_back(k);
    return e;
  }
  void validate(int n_components) const {
    for (int k : reversed)
      if (k < 1 || k >= n_components)
        throw std::invalid_argument("orientation subset must omit component 0");
  }
};

struct LeeTable {
  std::map<int, std::size_t> dims;

  std::size_t total() const {
    std::size_t t = 0;
    for (auto& [i, v] : dims) t += v;
    return t;
  }
  bool operator==(const LeeTable& o) const { return dims == o.dims; }
};

// Dimensions of H(C-bar(D), Phi + d) per unshifted degree, computed in the
// a,b basis.
inline std::map<int, std::size_t> lee_unshifted_dims(const Diagram& d,
                                                     int max_crossings = kDefaultCrossingCap,
                                                     int jobs = 0) {
  KhovanovComplex cx(d, lee_total_frobenius(), max_crossings);
  cx.assert_d_squared_zero();
  const int top = cx.top_degree();
  std::vector<std::size_t> r(top + 1, 0);
  parallel_for(top, resolve_job_count(jobs), [&](int i) { r[i] = rank(cx.differential(i)); });
  std::map<int, std::size_t> out;
  for (int i = 0; i <= top; ++i) {
    std::size_t dim = cx.basis(i).total;
    std::size_t h = dim - r[i] - (i > 0 ? r[i - 1] : 0);
    if (h > 0) out[i] = h;
  }
  return out;
}

// Same dimensions computed in the 1,x basis as the sum of the two
// differentials; the two routes must agree.
inline std::map<int, std::size_t> lee_unshifted_dims_via_sum(
    const Diagram& d, int max_crossings = kDefaultCrossingCap, int jobs = 0) {
  KhovanovComplex k(d, khovanov_frobenius(), max_crossings);
  KhovanovComplex p(d, lee_phi_frobenius(), max_crossings);
  const int top = k.top_degree();
  std::vector<std::size_t> r(top + 1, 0);
  parallel_for(top, resolve_job_count(jobs), [&](int i) {
    const auto& a = k.differential(i);
    const auto& b = p.differential(i);
    std::vector<std::tuple<int, int, Rational>> trip;
    for (std::size_t row = 0; row < a.rows(); ++row) {
      for (const auto& [c, v] : a.row(row)) trip.emplace_back(int(row), c, v);
      for (const auto& [c, v] : b.row(row)) trip.emplace_back(int(row), c, v);
    }
    r[i] = rank(SparseRationalMatrix::from_triplets(a.rows(), a.cols(), trip));
  });
  std::map<int, std::size_t> out;
  for (int i = 0; i <= top; ++i) {
    std::size_t dim = k.basis(i).total;
    std::size_t h = dim - r[i] - (i > 0 ? r[i - 1] : 0);
    if (h > 0) out[i] = h;
  }
  return out;
}

inline LeeTable lee_homology(const Diagram& d, int max_crossings = kDefaultCrossingCap,
                             int jobs = 0) {
  auto [x, y] = d.crossing_counts();
  (void)y;
  LeeTable t;
  for (auto& [i, v] : lee_unshifted_dims(d, max_crossings, jobs)) t.dims[i - x] = v;
  return t;
}

// dim H^i = 2 |{ E in {2..n} : sum over j in E, k not in E of 2 l_jk = i }|.
inline LeeTable predicted_lee_table(const std::vector<std::vector<Rational>>& linking, int n) {
  LeeTable t;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Rational s(0);
    for (int j = 0; j < n; ++j) {
      bool j_in = j > 0 && ((mask >> (j - 1)) & 1u);
      if (!j_in) continue;
      for (int k = 0; k < n; ++k) {
        bool k_in = k > 0 && ((mask >> (k - 1)) & 1u);
        if (!k_in) s += 2 * linking[j][k];
      }
    }
    if (denominator(s) != 1) throw std::logic_error("linking numbers must be integers");
    t.dims[int(numerator(s))] += 2;
  }
  return t;
}

// --- canonical generators ----------------------------------------------------

enum class GeneratorSide { plus, minus };

struct CanonicalGenerator {
  State state;                // the orientation-preserving resolution
  std::uint32_t ab_labeling;  // bit per circle: 0 = a, 1 = b
  int i_bar;                  // unshifted homological degree
  int i_shifted;              // degree in C(D)
};

// The orientation-preserving resolution for orientation E labels the two
// groups of the bipartitioned Seifert circles with a and b.
inline CanonicalGenerator canonical_generator(const Diagram& d, const OrientationSubset& e,
                                              GeneratorSide side) {
  e.validate(d.component_count());
  Diagram dr = d.reoriented(e.reversed);

  State s{0};
  for (int k = 0; k < d.crossing_count(); ++k)
    if (dr.sign(k) < 0) s.bits |= (1u << k);

  Resolution res = resolve(d, s);
  int nc = res.n_circles();
  // two-color the circle/crossing adjacency graph
  std::vector<std::vector<int>> adj(nc);
  for (auto& [c1, c2] : res.crossing_circles) {
    if (c1 == c2)
      throw std::logic_error("orientation-preserving resolution has a self-adjacent circle");
    adj[c1].push_back(c2);
    adj[c2].push_back(c1);
  }
  std::vector<int> color(nc, -1);
  for (int start = 0; start < nc; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          throw std::logic_error("Seifert adjacency graph is not bipartite");
        }
      }
    }
  }

  CanonicalGenerator g;
  g.state = s;
  g.ab_labeling = 0;
  for (int ci = 0; ci < nc; ++ci) {
    int sym = (side == GeneratorSide::plus) ? color[ci] : 1 - color[ci];
    g.ab_labeling |= std::uint32_t(sym) << ci;
  }
  g.i_bar = s.weight();
  auto [x, y] = d.crossing_counts();
  (void)y;
  g.i_shifted = g.i_bar - x;
  return g;
}

// Expansion of an a,b labeling into the 1,x basis: list of (labeling, +-1).
inline std::vector<std::pair<std::uint32_t, int>> expand_ab_labeling(std::uint32_t ab,
                                                                     int n_circles) {
  std::vector<std::pair<std::uint32_t, int>> out{{0u, 1}};
  out.reserve(std::size_t(1) << n_circles);
  for (int ci = 0; ci < n_circles; ++ci) {
    std::vector<std::pair<std::uint32_t, int>> next;
    next.reserve(out.size() * 2);
    bool is_b = (ab >> ci) & 1u;
    for (auto& [mask, coeff] : out) {
      next.emplace_back(mask | (1u << ci), coeff);               // x term
      next.emplace_back(mask, is_b ? -coeff : coeff);            // unit term
    }
    out = std::move(next);
  }
  return out;
}

// --- the induced endomorphism on homology -------------------------------------

struct PhiHomologyReport {
  std::map<std::pair<int, int>, std::size_t> h_dim;     // shifted (i, j)
  std::map<std::pair<int, int>, std::size_t> phi_rank;  // rank of Phi* out of (i, j)
  std::map<std::pair<int, int>, std::size_t> ker_mod_im;
  std::size_t total_ker_mod_im = 0;
};

// Applies Phi to cycle representatives, projects into homology by extending
// the boundary space to a cycle basis, and reads off ranks per bidegree.
inline PhiHomologyReport phi_on_homology(const Diagram& d,
                                         int max_crossings = kDefaultCrossingCap) {
  KhovanovComplex kc(d, khovanov_frobenius(), max_crossings);
  KhovanovComplex pc(d, lee_phi_frobenius(), max_crossings);
  const int top = kc.top_degree();

  // generator indices per (i_bar, q_bar)
  auto block_cols = [&](int i, int q) {
    std::vector<int> cols;
    const auto& b = kc.basis(i);
    for (int g = 0; g < b.total; ++g)
      if (b.qdeg[g] == q) cols.push_back(g);
    return cols;
  };
  auto slice = [&](const SparseRationalMatrix& m, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    std::vector<int> row_of(m.rows(), -1), col_of(m.cols(), -1);
    for (std::size_t k = 0; k < rows.size(); ++k) row_of[rows[k]] = int(k);
    for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = int(k);
    std::vector<std::tuple<int, int, Rational>> trip;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (row_of[r] < 0) continue;
      for (const auto& [c, v] : m.row(r))
        if (col_of[c] >= 0) trip.emplace_back(row_of[r], col_of[c], v);
    }
    return SparseRationalMatrix::from_triplets(rows.size(), cols.size(), trip);
  };

  // per (i, q): cycle basis, boundary columns, chosen homology representatives
  struct Block {
    std::vector<int> cols;
    std::vector<std::vector<Rational>> reps;  // homology representatives
    SparseRationalMatrix rep_solver;          // [boundaries | reps] as columns
    std::size_t n_bound = 0;
    std::size_t h = 0;
  };
  std::map<std::pair<int, int>, Block> blocks;
  std::set<std::pair<int, int>> keys;
  for (int i = 0; i <= top; ++i)
    for (int q : std::set<int>(kc.basis(i).qdeg.begin(), kc.basis(i).qdeg.end()))
      keys.insert({i, q});

  for (auto& [i, q] : keys) {
    Block blk;
    blk.cols = block_cols(i, q);
    if (blk.cols.empty()) continue;
    int dim = int(blk.cols.size());

    SparseRationalMatrix d_out =
        (i < top) ? slice(kc.differential(i), block_cols(i + 1, q), blk.cols)
                  : SparseRationalMatrix(0, dim);
    auto cycles = kernel_basis(d_out);

    std::vector<std::vector<Rational>> bound_cols;
    if (i > 0) {
      auto prev_cols = block_cols(i - 1, q);
      SparseRationalMatrix d_in = slice(kc.differential(i - 1), blk.cols, prev_cols);
      for (std::size_t cidx = 0; cidx < prev_cols.size(); ++cidx) {
        auto col = d_in.dense_column(cidx);
        bool nz = false;
        for (auto& v : col) nz = nz || v != 0;
        if (nz) bound_cols.push_back(std::move(col));
      }
    }

    IncrementalSpan span(dim);
    std::vector<std::vector<Rational>> bound_basis;
    for (auto& b : bound_cols)
      if (span.insert(b)) bound_basis.push_back(b);
    blk.n_bound = bound_basis.size();
    for (auto& z : cycles)
      if (span.insert(z)) blk.reps.push_back(z);
    blk.h = blk.reps.size();

    std::vector<std::vector<Rational>> solver_cols = bound_basis;
    for (auto& z : blk.reps) solver_cols.push_back(z);
    blk.rep_solver = SparseRationalMatrix::from_columns(dim, solver_cols);
    blocks[{i, q}] = std::move(blk);
  }

  // Phi* matrices per (i, q), in homology coordinates
  PhiHomologyReport rep;
  std::map<std::pair<int, int>, std::vector<std::vector<Rational>>> f;  // columns
  for (auto& [key, blk] : blocks) {
    auto [i, q] = key;
    if (blk.h > 0) {
      auto [si, sq] = kc.shifted(i, q);
      rep.h_dim[{si, sq}] = blk.h;
    }
    if (blk.h == 0 || i >= top) continue;
    auto it = blocks.find({i + 1, q + 4});
    if (it == blocks.end() || it->second.h == 0) continue;
    Block& dst = it->second;

    SparseRationalMatrix phi = slice(pc.differential(i), dst.cols, blk.cols);
    SparseRationalMatrix d_next =
        (i + 1 < top) ? slice(kc.differential(i + 1), block_cols(i + 2, q + 4), dst.cols)
                      : SparseRationalMatrix(0, int(dst.cols.size()));

    std::vector<std::vector<Rational>> cols;
    for (auto& z : blk.reps) {
      auto w = phi.apply(z);
      for (auto& v : d_next.apply(w))
        if (v != 0) throw std::logic_error("phi image of a cycle is not a cycle");
      auto lambda = solve(dst.rep_solver, w);
      if (!lambda) throw std::logic_error("phi image not expressible in cycle basis");
      std::vector<Rational> col(dst.h);
      for (std::size_t k = 0; k < dst.h; ++k) col[k] = (*lambda)[dst.n_bound + k];
      cols.push_back(std::move(col));
    }
    f[key] = std::move(cols);
  }

  // ranks and the graded kernel/image quotient
  std::map<std::pair<int, int>, std::size_t> rank_out;
  for (auto& [key, cols] : f) {
    auto [i, q] = key;
    std::size_t h_dst = blocks[{i + 1, q + 4}].h;
    auto m = SparseRationalMatrix::from_columns(h_dst, cols);
    std::size_t r = rank(m);
    if (r > 0) {
      auto [si, sq] = kc.shifted(i, q);
      rep.phi_rank[{si, sq}] = r;
    }
    rank_out[key] = r;
  }
  for (auto& [key, blk] : blocks) {
    if (blk.h == 0) continue;
    auto [i, q] = key;
    std::size_t out_rank = rank_out.count(key) ? rank_out[key] : 0;
    std::size_t in_rank = rank_out.count({i - 1, q - 4}) ? rank_out[{i - 1, q - 4}] : 0;
    std::size_t km = blk.h - out_rank - in_rank;
    auto [si, sq] = kc.shifted(i, q);
    if (km > 0) rep.ker_mod_im[{si, sq}] = km;
    rep.total_ker_mod_im += km;
  }
  return rep;
}

}  // namespace khoreo
