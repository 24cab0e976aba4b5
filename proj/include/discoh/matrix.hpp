#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "discoh/errors.hpp"
#include "discoh/scalar.hpp"

namespace discoh {

/// Dense row-major matrix over a ring-like scalar T. T must provide T{} as
/// zero, T(1), +, -, *, and a free function is_zero(const T&).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Copies `block` with its (0,0) entry landing at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
      throw InvariantError("block does not fit");
    for (std::size_t r = 0; r < block.rows_; ++r)
      for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvariantError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  /// Skips zero entries of the left factor, which keeps block-sparse
  /// products cheap.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw InvariantError("shape mismatch in product: " + std::to_string(a.rows_) + "x" +
                           std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                           std::to_string(b.cols_));
    Matrix out(a.rows_, b.cols_);
    std::vector<std::vector<std::size_t>> b_support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!is_zero(b(k, c))) b_support[k].push_back(c);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (is_zero(x)) continue;
        for (std::size_t c : b_support[k]) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvariantError("shape mismatch in sum");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Block-diagonal sum of `copies` copies of m.
template <class T>
Matrix<T> direct_sum_power(const Matrix<T>& m, std::size_t copies) {
  Matrix<T> out(m.rows() * copies, m.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.set_block(c * m.rows(), c * m.cols(), m);
  return out;
}

}  // namespace discoh
