#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lbq/scalar.hpp"

namespace lbq {

/// Dense square-or-rectangular matrix over one scalar mode.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (ScalarOps<T>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) += a * o(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

/// Gauss-Jordan inverse. Exact modes pivot on the first nonzero entry,
/// float mode on the entry of largest magnitude.
template <class T>
Matrix<T> inverse(Matrix<T> a, const std::string& label = "matrix") {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse: " + label + " is not square");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (ScalarOps<T>::exact) {
      while (pivot < n && ScalarOps<T>::is_zero(a(pivot, col))) ++pivot;
      if (pivot == n)
        throw std::domain_error("inverse: " + label + " is singular");
    } else {
      double best = std::abs(ScalarOps<T>::to_double(a(col, col)));
      for (std::size_t r = col + 1; r < n; ++r) {
        double v = std::abs(ScalarOps<T>::to_double(a(r, col)));
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
      if (best == 0.0)
        throw std::domain_error("inverse: " + label + " is singular");
    }
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    T d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      T f = a(r, col);
      if (ScalarOps<T>::is_zero(f)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace lbq
