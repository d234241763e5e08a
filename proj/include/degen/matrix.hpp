#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/laurent.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

/// Dense row-major matrix over one of the coefficient rings.
template <class R>
class Matrix {
 public:
  using value_type = R;

  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<const R&>()))> {
    Matrix<decltype(fn(std::declval<const R&>()))> out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<R> data_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;               // reduced row echelon form
  std::vector<size_t> pivot_cols;  // one per nonzero row
};

/// Gauss-Jordan elimination over a field, taking the first invertible entry
/// of each column as pivot.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  RowEchelon<F> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = m.rows();
    for (size_t i = row; i < m.rows(); ++i) {
      if (is_invertible(m(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const F inv = inverse(m(row, col));
    for (size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivot_cols.size();
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const RowEchelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free (Bareiss) determinant with first-nonzero pivoting.
template <class F>
F det(Matrix<F> m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return F(1);
  F sign(1);
  F prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      size_t swap_row = n;
      for (size_t i = k + 1; i < n; ++i) {
        if (!is_zero(m(i, k))) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) return F(0);
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = F(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Laplace expansion; works over any commutative ring (used for small
/// matrices over truncated series).
template <class R>
R det_expand(const Matrix<R>& m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R total;
  for (size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    Matrix<R> minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    R term = m(0, j) * det_expand(minor);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

/// One solution of m x = b. Throws Inconsistent when none exists.
template <class F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::dimension_mismatch, "right-hand side length mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon<F> e = row_reduce(std::move(aug));
  std::vector<F> x(m.cols());
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (e.pivot_cols[r] == m.cols()) throw Error(ErrorCode::inconsistent, "linear system has no solution");
    x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  }
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const RowEchelon<F> e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) {
    throw Error(ErrorCode::singular, "matrix is singular");
  }
  Matrix<F> out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

/// Rank data of a matrix over K[[t]] known to finite order. Elimination with
/// minimal-valuation pivots; each pivot's valuation is recorded, and a pivot
/// is only accepted when it is nonzero within the precision left.
struct LocalRank {
  std::vector<int> pivot_valuations;
  /// True when the remaining block is zero to the available order, so no
  /// statement about higher rank is possible.
  bool exhausted_precision = false;
  size_t certified_rank() const { return pivot_valuations.size(); }
};

LocalRank local_rank(Matrix<TruncSeries> m);

}  // namespace degen
