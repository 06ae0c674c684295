#ifndef WPGL_MATRIX_HPP
#define WPGL_MATRIX_HPP

#include <optional>
#include <vector>

#include "wpgl/field.hpp"

namespace wpgl {

// Small dense matrix over an exact field; plain Gaussian elimination is
// exact here, no pivoting strategy needed beyond nonzero search.
template <CoefficientField F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix(int n, int m, F field)
      : n_(n), m_(m), field_(std::move(field)), a_(static_cast<std::size_t>(n) * m, field_.zero()) {
    require(n >= 0 && m >= 0, "negative matrix dimension");
  }

  static Matrix identity(int n, const F& field) {
    Matrix r(n, n, field);
    for (int i = 0; i < n; ++i) r.at(i, i) = field.one();
    return r;
  }

  int rows() const { return n_; }
  int cols() const { return m_; }
  const F& field() const { return field_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * m_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * m_ + j]; }

  Matrix operator*(const Matrix& o) const {
    require(m_ == o.n_, "matrix shape mismatch");
    require(field_ == o.field_, "field mismatch");
    Matrix r(n_, o.m_, field_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.m_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (n_ != o.n_ || m_ != o.m_ || !(field_ == o.field_)) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == o.a_[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Elem det() const {
    require(n_ == m_, "determinant of a non-square matrix");
    Matrix w = *this;
    Elem d = field_.one();
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int row = col; row < n_; ++row)
        if (!w.at(row, col).is_zero()) {
          pivot = row;
          break;
        }
      if (pivot < 0) return field_.zero();
      if (pivot != col) {
        for (int j = 0; j < n_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
        d = -d;
      }
      d = d * w.at(col, col);
      const Elem inv = w.at(col, col).inverse();
      for (int row = col + 1; row < n_; ++row) {
        if (w.at(row, col).is_zero()) continue;
        const Elem f = w.at(row, col) * inv;
        for (int j = col; j < n_; ++j)
          w.at(row, j) = w.at(row, j) - f * w.at(col, j);
      }
    }
    return d;
  }

  std::optional<Matrix> inverse() const {
    require(n_ == m_, "inverse of a non-square matrix");
    Matrix w = *this;
    Matrix r = identity(n_, field_);
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int row = col; row < n_; ++row)
        if (!w.at(row, col).is_zero()) {
          pivot = row;
          break;
        }
      if (pivot < 0) return std::nullopt;
      if (pivot != col)
        for (int j = 0; j < n_; ++j) {
          std::swap(w.at(pivot, j), w.at(col, j));
          std::swap(r.at(pivot, j), r.at(col, j));
        }
      const Elem inv = w.at(col, col).inverse();
      for (int j = 0; j < n_; ++j) {
        w.at(col, j) = w.at(col, j) * inv;
        r.at(col, j) = r.at(col, j) * inv;
      }
      for (int row = 0; row < n_; ++row) {
        if (row == col || w.at(row, col).is_zero()) continue;
        const Elem f = w.at(row, col);
        for (int j = 0; j < n_; ++j) {
          w.at(row, j) = w.at(row, j) - f * w.at(col, j);
          r.at(row, j) = r.at(row, j) - f * r.at(col, j);
        }
      }
    }
    return r;
  }

private:
  int n_, m_;
  F field_;
  std::vector<Elem> a_;
};

// Integer matrix, only as large as the distinct-weight count; determinant
// by cofactor expansion is exact in 64 bits at this scale.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row major

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  long long det() const {
    if (n == 0) return 1;
    if (n == 1) return at(0, 0);
    long long total = 0;
    for (int k = 0; k < n; ++k) {
      if (at(0, k) == 0) continue;
      IntMatrix minor(n - 1);
      for (int i = 1; i < n; ++i) {
        int jj = 0;
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          minor.at(i - 1, jj++) = at(i, j);
        }
      }
      const long long term = at(0, k) * minor.det();
      total += (k % 2 == 0) ? term : -term;
    }
    return total;
  }

  bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
};

}  // namespace wpgl

#endif
