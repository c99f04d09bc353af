// Exact Gaussian elimination over the rationals with sparsity-aware pivoting.
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "khoreo/sparse_matrix.hpp"

namespace khoreo {

namespace detail {

// pivot-normalized axpy on sorted rows: dst -= f * src, src has 1 at pivot col.
inline SparseRow row_axpy(const SparseRow& dst, const SparseRow& src, const Rational& f) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -f * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second - f * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

inline const Rational* row_coeff(const SparseRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& p, int c) { return p.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

}  // namespace detail

// Forward elimination to row-echelon form.  Pivots are chosen greedily to
// limit fill-in: smallest active row first, then the column of that row with
// the fewest occurrences among active rows.  Columns >= pivot_col_limit are
// never chosen as pivots (used to carry augmented right-hand sides).
class Elimination {
 public:
  explicit Elimination(const SparseRationalMatrix& m,
                       int pivot_col_limit = std::numeric_limits<int>::max())
      : cols_(int(m.cols())),
        limit_(std::min<long long>(pivot_col_limit, (long long)m.cols())) {
    std::vector<SparseRow> active;
    active.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m.row(r).empty()) active.push_back(m.row(r));
    run(std::move(active));
  }

  std::size_t rank() const { return pivots_.size(); }

  // Pivot rows in elimination order; row k has leading coefficient 1 at
  // column pivots_[k] and is free of all earlier pivot columns.
  const std::vector<SparseRow>& pivot_rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }

  bool is_pivot_col(int c) const { return pivot_of_col_.count(c) > 0; }

  // Null-space basis of the eliminated matrix (columns < pivot_col_limit).
  std::vector<std::vector<Rational>> kernel_basis() const {
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < limit_; ++f) {
      if (is_pivot_col(f)) continue;
      std::vector<Rational> v(cols_, Rational(0));
      v[f] = 1;
      back_substitute(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void run(std::vector<SparseRow> active) {
    // col -> indices of active rows containing it
    std::vector<std::set<int>> col_rows(cols_);
    for (std::size_t i = 0; i < active.size(); ++i)
      for (const auto& [c, v] : active[i]) col_rows[c].insert(int(i));

    std::set<std::pair<std::size_t, int>> by_size;  // (row size, row idx)
    for (std::size_t i = 0; i < active.size(); ++i)
      by_size.insert({active[i].size(), int(i)});

    auto detach = [&](int i) {
      by_size.erase({active[i].size(), i});
      for (const auto& [c, v] : active[i]) col_rows[c].erase(i);
    };
    auto attach = [&](int i) {
      if (active[i].empty()) return;
      by_size.insert({active[i].size(), i});
      for (const auto& [c, v] : active[i]) col_rows[c].insert(i);
    };

    while (!by_size.empty()) {
      int pr = -1, pc = -1;
      std::size_t best = std::numeric_limits<std::size_t>::max();
      // scan the smallest rows holding an eligible column for the sparsest
      // pivot column among them
      auto it = by_size.begin();
      while (it != by_size.end() && pr < 0) {
        std::size_t sz = it->first;
        for (; it != by_size.end() && it->first == sz; ++it) {
          for (const auto& [c, v] : active[it->second]) {
            if (c >= limit_) continue;
            if (col_rows[c].size() < best) {
              best = col_rows[c].size();
              pr = it->second;
              pc = c;
            }
          }
          if (best <= 1) break;
        }
      }
      if (pr < 0) break;  // only augmented columns remain

      detach(pr);
      SparseRow piv = std::move(active[pr]);
      active[pr].clear();
      // normalize leading coefficient to 1
      const Rational* lead = detail::row_coeff(piv, pc);
      Rational inv = 1 / *lead;
      for (auto& [c, v] : piv) v *= inv;

      std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
      for (int t : targets) {
        detach(t);
        const Rational* f = detail::row_coeff(active[t], pc);
        active[t] = detail::row_axpy(active[t], piv, *f);
        attach(t);
      }
      pivot_of_col_[pc] = int(rows_.size());
      pivots_.push_back(pc);
      rows_.push_back(std::move(piv));
    }
  }

  // Fill pivot coordinates of v so that every pivot row annihilates it.
  void back_substitute(std::vector<Rational>& v) const {
    for (int k = int(rows_.size()) - 1; k >= 0; --k) {
      Rational s(0);
      for (const auto& [c, w] : rows_[k])
        if (c != pivots_[k]) s += w * v[c];
      v[pivots_[k]] = -s;  // leading coefficient is 1
    }
  }

  int cols_;
  int limit_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivots_;
  std::map<int, int> pivot_of_col_;
};

inline std::size_t rank(const SparseRationalMatrix& m) { return Elimination(m).rank(); }

// Basis of { x : M x = 0 }, exactly cols - rank vectors.
inline std::vector<std::vector<Rational>> kernel_basis(const SparseRationalMatrix& m) {
  return Elimination(m).kernel_basis();
}

// Solves M x = b exactly; nullopt when inconsistent.  Free variables are 0.
inline std::optional<std::vector<Rational>> solve(const SparseRationalMatrix& m,
                                                  const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  int n = int(m.cols());
  std::vector<std::tuple<int, int, Rational>> t;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) t.emplace_back(int(r), c, v);
    if (b[r] != 0) t.emplace_back(int(r), n, b[r]);
  }
  auto aug = SparseRationalMatrix::from_triplets(m.rows(), n + 1, t);
  Elimination e(aug, n);
  std::vector<Rational> x(n, Rational(0));
  for (int k = int(e.pivot_rows().size()) - 1; k >= 0; --k) {
    const auto& row = e.pivot_rows()[k];
    int p = e.pivot_cols()[k];
    Rational s(0);
    for (const auto& [c, w] : row) {
      if (c == p) continue;
      if (c == n)
        s -= w;
      else
        s += w * x[c];
    }
    x[p] = -s;
  }
  // Rows that stalled with only augmented support never became pivots, so
  // consistency is confirmed by direct substitution.
  auto y = m.apply(x);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (y[r] != b[r]) return std::nullopt;
  return x;
}

// Incremental row-space tracker for independence tests and quotient bases.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int dim) : dim_(dim) {}

  // Returns true (and extends the span) iff v is independent of the span.
  bool insert(const std::vector<Rational>& v) {
    if (int(v.size()) != dim_) throw std::invalid_argument("span: dim mismatch");
    SparseRow r;
    for (int i = 0; i < dim_; ++i)
      if (v[i] != 0) r.emplace_back(i, v[i]);
    return insert_sparse(std::move(r));
  }

  bool insert_sparse(SparseRow r) {
    while (!r.empty()) {
      int lead = r[0].first;
      auto it = pivot_of_col_.find(lead);
      if (it == pivot_of_col_.end()) {
        Rational inv = 1 / r[0].second;
        for (auto& [c, v] : r) v *= inv;
        pivot_of_col_[lead] = int(rows_.size());
        rows_.push_back(std::move(r));
        return true;
      }
      r = detail::row_axpy(r, rows_[it->second], r[0].second);
    }
    return false;
  }

  bool contains(const std::vector<Rational>& v) const {
    SparseRow r;
    for (int i = 0; i < dim_; ++i)
      if (v[i] != 0) r.emplace_back(i, v[i]);
    while (!r.empty()) {
      auto it = pivot_of_col_.find(r[0].first);
      if (it == pivot_of_col_.end()) return false;
      r = detail::row_axpy(r, rows_[it->second], r[0].second);
    }
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  int dim_;
  std::vector<SparseRow> rows_;
  std::map<int, int> pivot_of_col_;
};

// dim span(cycles) - dim span(boundaries); rejects boundaries outside the
// cycle span (that means a broken complex upstream).
inline std::size_t quotient_dim(const std::vector<std::vector<Rational>>& cycles,
                                const std::vector<std::vector<Rational>>& boundaries) {
  int dim = 0;
  if (!cycles.empty()) dim = int(cycles[0].size());
  else if (!boundaries.empty()) dim = int(boundaries[0].size());
  IncrementalSpan cyc(dim);
  for (const auto& z : cycles) cyc.insert(z);
  IncrementalSpan bnd(dim);
  for (const auto& b : boundaries) {
    if (!cyc.contains(b))
      throw std::invalid_argument("quotient_dim: boundary not in cycle span");
    bnd.insert(b);
  }
  return cyc.rank() - bnd.rank();
}

}  // namespace khoreo
