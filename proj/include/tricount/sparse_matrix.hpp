#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/graph.hpp"
#include "tricount/parallel.hpp"

namespace tricount {

using MatrixValue = std::uint32_t;

/// CSR matrix of small non-negative integers. Columns within a row are
/// strictly increasing; stored values are never zero.
class SparseMatrix {
 public:
  SparseMatrix() : offsets_{0} {}
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), offsets_(rows + 1, 0) {}

  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<EdgeOffset> row_offsets,
               std::vector<VertexId> col_indices, std::vector<MatrixValue> values)
      : rows_(rows), cols_(cols), offsets_(std::move(row_offsets)),
        indices_(std::move(col_indices)), values_(std::move(values)) {
    if (!is_valid()) throw InputError("malformed CSR matrix");
  }

  static SparseMatrix from_dense(const std::vector<std::vector<MatrixValue>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense[0].size() : 0;
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (dense[i].size() != cols) throw InputError("ragged dense matrix");
      for (std::size_t j = 0; j < cols; ++j) {
        if (dense[i][j] == 0) continue;
        m.indices_.push_back(static_cast<VertexId>(j));
        m.values_.push_back(dense[i][j]);
      }
      m.offsets_[i + 1] = m.indices_.size();
    }
    return m;
  }

  std::vector<std::vector<MatrixValue>> to_dense() const {
    std::vector<std::vector<MatrixValue>> d(rows_, std::vector<MatrixValue>(cols_, 0));
    for (std::size_t i = 0; i < rows_; ++i) {
      auto cols = row_columns(i);
      auto vals = row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) d[i][cols[k]] = vals[k];
    }
    return d;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return indices_.size(); }

  std::span<const VertexId> row_columns(std::size_t i) const noexcept {
    return {indices_.data() + offsets_[i], indices_.data() + offsets_[i + 1]};
  }
  std::span<const MatrixValue> row_values(std::size_t i) const noexcept {
    return {values_.data() + offsets_[i], values_.data() + offsets_[i + 1]};
  }

  MatrixValue at(std::size_t i, std::size_t j) const {
    auto cols = row_columns(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0;
    return row_values(i)[static_cast<std::size_t>(it - cols.begin())];
  }

  std::uint64_t sum() const {
    return std::accumulate(values_.begin(), values_.end(), std::uint64_t{0});
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      auto cols = row_columns(i);
      auto vals = row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (at(cols[k], i) != vals[k]) return false;
    }
    return true;
  }

  bool is_valid() const {
    if (offsets_.size() != rows_ + 1 || offsets_.front() != 0) return false;
    if (offsets_.back() != indices_.size() || indices_.size() != values_.size()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (offsets_[i] > offsets_[i + 1]) return false;
      auto cols = row_columns(i);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] >= cols_) return false;
        if (k > 0 && cols[k - 1] >= cols[k]) return false;
      }
    }
    return std::none_of(values_.begin(), values_.end(), [](MatrixValue v) { return v == 0; });
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  friend class SparseMatrixBuilder;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EdgeOffset> offsets_;
  std::vector<VertexId> indices_;
  std::vector<MatrixValue> values_;
};

/// Assembles a SparseMatrix from independently computed rows: fill rows
/// (possibly in parallel), then finish() prefix-sums the row sizes.
class SparseMatrixBuilder {
 public:
  struct Row {
    std::vector<VertexId> cols;
    std::vector<MatrixValue> vals;
  };

  SparseMatrixBuilder(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  Row& row(std::size_t i) { return rows_[i]; }

  SparseMatrix finish() && {
    SparseMatrix m(rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      m.offsets_[i + 1] = m.offsets_[i] + rows_[i].cols.size();
    m.indices_.reserve(m.offsets_.back());
    m.values_.reserve(m.offsets_.back());
    for (auto& r : rows_) {
      m.indices_.insert(m.indices_.end(), r.cols.begin(), r.cols.end());
      m.values_.insert(m.values_.end(), r.vals.begin(), r.vals.end());
      r = {};
    }
    return m;
  }

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

inline SparseMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  auto offsets = std::vector<EdgeOffset>(g.row_offsets().begin(), g.row_offsets().end());
  auto indices = std::vector<VertexId>(g.column_indices().begin(), g.column_indices().end());
  std::vector<MatrixValue> values(indices.size(), 1);
  return SparseMatrix(n, n, std::move(offsets), std::move(indices), std::move(values));
}

inline SparseMatrix transpose(const SparseMatrix& a) {
  SparseMatrixBuilder out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto cols = a.row_columns(i);
    auto vals = a.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto& r = out.row(cols[k]);
      r.cols.push_back(static_cast<VertexId>(i));
      r.vals.push_back(vals[k]);
    }
  }
  return std::move(out).finish();
}

/// Splits a square zero-diagonal matrix into its strictly lower (L) and
/// strictly upper (U) parts, A = L + U.
inline std::pair<SparseMatrix, SparseMatrix> split_triangular(const SparseMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("split_triangular needs a square matrix");
  SparseMatrixBuilder lower(a.rows(), a.cols()), upper(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto cols = a.row_columns(i);
    auto vals = a.row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] == i) throw InputError("nonzero diagonal entry at row " + std::to_string(i));
      auto& r = cols[k] < i ? lower.row(i) : upper.row(i);
      r.cols.push_back(cols[k]);
      r.vals.push_back(vals[k]);
    }
  }
  return {std::move(lower).finish(), std::move(upper).finish()};
}

/// Sum over k of a_k * b_k for two sparse vectors with sorted index lists.
inline std::uint64_t sparse_dot(std::span<const VertexId> a_idx, std::span<const MatrixValue> a_val,
                                std::span<const VertexId> b_idx, std::span<const MatrixValue> b_val) {
  std::uint64_t s = 0;
  std::size_t i = 0, j = 0;
  while (i < a_idx.size() && j < b_idx.size()) {
    if (a_idx[i] < b_idx[j]) {
      ++i;
    } else if (b_idx[j] < a_idx[i]) {
      ++j;
    } else {
      s += std::uint64_t{a_val[i++]} * b_val[j++];
    }
  }
  return s;
}

/// Sparse product l * u.
///
/// Without a mask this is row-wise Gustavson: each row of l scales and
/// accumulates rows of u into a dense per-chunk accumulator, and the touched
/// columns are sorted before the row is emitted.
///
/// With a mask, only positions stored in the mask are evaluated, each as a
/// sorted dot product of row i of l with column j of u (u is transposed once).
/// Positions whose product is zero are not stored in either mode.
inline SparseMatrix spgemm(const SparseMatrix& l, const SparseMatrix& u,
                           const SparseMatrix* mask = nullptr, unsigned threads = 1) {
  if (l.cols() != u.rows())
    throw InputError("spgemm inner dimensions differ: " + std::to_string(l.cols()) + " vs " +
                     std::to_string(u.rows()));
  if (mask && (mask->rows() != l.rows() || mask->cols() != u.cols()))
    throw InputError("spgemm mask shape does not match the product");

  threads = resolve_threads(threads);
  const std::size_t rows = l.rows();
  SparseMatrixBuilder out(rows, u.cols());

  if (mask) {
    const SparseMatrix ut = transpose(u);
    parallel_for(rows, threads, [&](std::size_t i) {
      auto& r = out.row(i);
      for (VertexId j : mask->row_columns(i)) {
        const std::uint64_t s =
            sparse_dot(l.row_columns(i), l.row_values(i), ut.row_columns(j), ut.row_values(j));
        if (s == 0) continue;
        r.cols.push_back(j);
        r.vals.push_back(static_cast<MatrixValue>(s));
      }
    });
    return std::move(out).finish();
  }

  parallel_chunks(rows, chunk_count(rows, threads), threads,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    std::vector<MatrixValue> acc(u.cols(), 0);
                    std::vector<VertexId> touched;
                    for (std::size_t i = begin; i < end; ++i) {
                      auto lc = l.row_columns(i);
                      auto lv = l.row_values(i);
                      for (std::size_t k = 0; k < lc.size(); ++k) {
                        auto uc = u.row_columns(lc[k]);
                        auto uv = u.row_values(lc[k]);
                        for (std::size_t t = 0; t < uc.size(); ++t) {
                          if (acc[uc[t]] == 0) touched.push_back(uc[t]);
                          acc[uc[t]] += lv[k] * uv[t];
                        }
                      }
                      std::sort(touched.begin(), touched.end());
                      auto& r = out.row(i);
                      r.cols = touched;
                      r.vals.reserve(touched.size());
                      for (VertexId j : touched) {
                        r.vals.push_back(acc[j]);
                        acc[j] = 0;
                      }
                      touched.clear();
                    }
                  });
  return std::move(out).finish();
}

/// Entry-wise product over the intersection of the two patterns.
inline SparseMatrix hadamard(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("hadamard shape mismatch");
  SparseMatrixBuilder out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ac = a.row_columns(i), bc = b.row_columns(i);
    auto av = a.row_values(i), bv = b.row_values(i);
    auto& r = out.row(i);
    std::size_t p = 0, q = 0;
    while (p < ac.size() && q < bc.size()) {
      if (ac[p] < bc[q]) {
        ++p;
      } else if (bc[q] < ac[p]) {
        ++q;
      } else {
        r.cols.push_back(ac[p]);
        r.vals.push_back(av[p++] * bv[q++]);
      }
    }
  }
  return std::move(out).finish();
}

}  // namespace tricount
