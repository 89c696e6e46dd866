#pragma once

// Small dense matrices over an exact field (multiplication matrices of
// zero-dimensional quotient rings, Hessians).

#include <cstddef>
#include <optional>
#include <vector>

#include "tricusp/error.hpp"

namespace tricusp {

template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix scaled(const Element& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }
  /// this - c * I
  Matrix shifted(const Element& c) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) r(i, i) = r(i, i) - c;
    return r;
  }
  Matrix pow(unsigned e) const {
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

/// Row-reduces in place; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const auto f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

/// Kernel basis as the columns of an n x d matrix, in column echelon form: row
/// free[j] of column j is 1 and rows free[i != j] are 0.
template <class F>
struct KernelBasis {
  Matrix<F> basis;
  std::vector<std::size_t> free_rows;
};

template <class F>
KernelBasis<F> kernel(Matrix<F> m) {
  const auto pivots = row_reduce(m);
  std::vector<std::size_t> free;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<F> basis(m.field(), m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free[k]);
  }
  return {std::move(basis), std::move(free)};
}

/// Matrix of the restriction of op to the op-invariant subspace spanned by the kernel basis.
template <class F>
Matrix<F> restrict_to(const Matrix<F>& op, const KernelBasis<F>& sub) {
  const Matrix<F> image = op * sub.basis;
  const std::size_t d = sub.free_rows.size();
  Matrix<F> r(op.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = image(sub.free_rows[i], j);
  return r;
}

/// Characteristic polynomial det(T*I - m), coefficients low to high (monic).
/// Hessenberg reduction followed by the standard recurrence.
template <class F>
std::vector<typename F::Element> characteristic_polynomial(Matrix<F> h) {
  using E = typename F::Element;
  const F& field = h.field();
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const E inv = h(m, m - 1).inverse();
    for (std::size_t k = m + 1; k < n; ++k) {
      if (h(k, m - 1).is_zero()) continue;
      const E u = h(k, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(k, j) = h(k, j) - u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) = h(j, m) + u * h(j, k);
    }
  }
  // p[m] = characteristic polynomial of the leading m x m block.
  std::vector<std::vector<E>> p(n + 1);
  p[0] = {field.one()};
  auto axpy = [&](std::vector<E>& acc, const std::vector<E>& v, const E& c, std::size_t shift) {
    if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, field.zero());
    for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] += v[i] * c;
  };
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<E> cur(m + 1, field.zero());
    axpy(cur, p[m - 1], field.one(), 1);
    axpy(cur, p[m - 1], -h(m - 1, m - 1), 0);
    E t = field.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = t * h(m - i, m - i - 1);
      axpy(cur, p[m - i - 1], -(h(m - i - 1, m - 1) * t), 0);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace tricusp
