#pragma once

// Exact dense matrices, fraction-free determinants and rational kernels.

#include "virlog/multipoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace virlog {

template <class R>
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  ExactMatrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<R> operator*(const std::vector<R>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<R> out(rows_, R(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    ExactMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> ExactMatrix<decltype(f(std::declval<const R&>()))> {
    ExactMatrix<decltype(f(std::declval<const R&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

/// Determinant by Bareiss fraction-free elimination. Every division is exact,
/// so polynomial entries never leave the polynomial ring.
template <class R>
R bareiss_determinant(ExactMatrix<R> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return R(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? R(-det) : det;
}

/// Reduced row echelon form over Q in place; returns pivot columns.
/// Pivot choice: leftmost column, first row with a nonzero entry.
inline std::vector<std::size_t> rref(ExactMatrix<Rational>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(ExactMatrix<Rational> m) { return rref(m).size(); }

/// Basis of the right kernel {x : M x = 0}, one vector per free column,
/// with that free coordinate set to 1.
inline std::vector<std::vector<Rational>> null_space(ExactMatrix<Rational> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Whether `v` lies in the column span of `cols` (given as column vectors).
inline bool in_span(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& v) {
  if (cols.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  ExactMatrix<Rational> a(v.size(), cols.size()), ab(v.size(), cols.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) a(i, j) = ab(i, j) = cols[j].at(i);
    ab(i, cols.size()) = v[i];
  }
  return rank(a) == rank(ab);
}

}  // namespace virlog
