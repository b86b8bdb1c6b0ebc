#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matroid_id/core/prime_field.hpp"
#include "matroid_id/core/rational.hpp"

namespace matroid_id {

// Dense row-major matrix of values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // Submatrix keeping every row and the listed columns, in the listed order.
  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix m(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] >= cols_) throw std::out_of_range("column index out of range");
        m(i, k) = (*this)(i, cols[k]);
      }
    return m;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Rank by Gaussian elimination over an exact field (Rational or F_p).
// Takes the matrix by value; it is consumed as scratch space.
template <class F>
std::size_t scalar_rank(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (!FieldTraits<F>::is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    m.swap_rows(pivot, rank);
    const F inv = F(1) / m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (FieldTraits<F>::is_zero(m(i, col))) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// In-place reduced row echelon form over a field; returns the pivot columns.
template <class F>
std::vector<std::size_t> reduce_to_rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!FieldTraits<F>::is_zero(m(i, col))) {
        p = i;
        break;
      }
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const F inv = F(1) / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || FieldTraits<F>::is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

// Basis of {x : m x = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace_basis(Matrix<F> m) {
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace matroid_id
