// Immutable sparse matrices over the rationals.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "khoreo/rational.hpp"

namespace khoreo {

// One matrix row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Sorts by column, sums duplicates, drops zeros.
inline SparseRow normalize_row(SparseRow r) {
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(r.size());
  for (auto& [c, v] : r) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  return out;
}

// Row-major sparse rational matrix, immutable once built.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() : rows_(0), cols_(0) {}
  SparseRationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  static SparseRationalMatrix from_triplets(
      std::size_t rows, std::size_t cols,
      const std::vector<std::tuple<int, int, Rational>>& triplets) {
    SparseRationalMatrix m(rows, cols);
    std::vector<SparseRow> tmp(rows);
    for (const auto& [r, c, v] : triplets) {
      if (r < 0 || c < 0 || std::size_t(r) >= rows || std::size_t(c) >= cols)
        throw std::out_of_range("matrix triplet index out of bounds");
      tmp[r].emplace_back(c, v);
    }
    for (std::size_t r = 0; r < rows; ++r) m.data_[r] = normalize_row(std::move(tmp[r]));
    return m;
  }

  // Columns given as dense vectors.
  static SparseRationalMatrix from_columns(
      std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    SparseRationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i)
        if (cols[j][i] != 0) m.data_[i].emplace_back(int(j), cols[j][i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  const SparseRow& row(std::size_t r) const { return data_.at(r); }

  Rational entry(std::size_t r, std::size_t c) const {
    for (const auto& [cc, v] : data_.at(r))
      if (std::size_t(cc) == c) return v;
    return Rational(0);
  }

  SparseRationalMatrix transposed() const {
    std::vector<std::tuple<int, int, Rational>> t;
    t.reserve(nnz());
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.emplace_back(c, int(r), v);
    return from_triplets(cols_, rows_, t);
  }

  // y = M x, dense in and out.
  std::vector<Rational> apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
  }

  // Sparse column access costs a full scan; used only in small checks.
  std::vector<Rational> dense_column(std::size_t c) const {
    std::vector<Rational> col(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) col[r] = entry(r, c);
    return col;
  }

  SparseRationalMatrix multiply(const SparseRationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
    std::vector<std::tuple<int, int, Rational>> t;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::map<int, Rational> acc;
      for (const auto& [k, v] : data_[r])
        for (const auto& [c, w] : other.data_[k]) acc[c] += v * w;
      for (auto& [c, v] : acc)
        if (v != 0) t.emplace_back(int(r), c, std::move(v));
    }
    return from_triplets(rows_, other.cols_, t);
  }

  bool is_zero() const { return nnz() == 0; }

  bool operator==(const SparseRationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<SparseRow> data_;
};

}  // namespace khoreo
