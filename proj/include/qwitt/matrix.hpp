#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qwitt/scalar.hpp"
#include "qwitt/tscalar.hpp"

namespace qwitt {

/// Dense row-major matrix over Scalar or TScalar. The zero entry is kept so
/// that every entry carries the right field even in empty products.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix m) {
    if (s.is_zero()) return Matrix(m.rows_, m.cols_, m.zero_);
    for (auto& v : m.a_)
      if (!v.is_zero()) v = s * v;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Entry-wise image under f, e.g. substituting a value for t.
  template <class U, class F>
  Matrix<U> map(const U& zero, F f) const {
    Matrix<U> r(rows_, cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  T zero_;
  std::vector<T> a_;
};

/// Kronecker product a (x) b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t m = 0; m < b.cols(); ++m)
          if (!b(k, m).is_zero()) r(i * b.rows() + k, j * b.cols() + m) = a(i, j) * b(k, m);
    }
  return r;
}

using ScalarMatrix = Matrix<Scalar>;
using TMatrix = Matrix<TScalar>;

/// Basis of the right null space {v : m v = 0}, one vector per free column
/// of the reduced row echelon form.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m);
/// Reduced row echelon form of the rows of m, zero rows removed.
std::vector<std::vector<Scalar>> row_basis(std::vector<std::vector<Scalar>> rows, const Scalar& zero);

}  // namespace qwitt
