#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quiverlab/rational.hpp"

namespace qlab {

/// Dense row-major matrix with value semantics. Zero-sized shapes are
/// meaningful: a map out of (or into) the zero space.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!(v == T{})) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const T& scalar) { return lhs *= scalar; }
  friend Matrix operator*(const T& scalar, Matrix rhs) { return rhs *= scalar; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (a == T{}) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw std::invalid_argument("matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<std::int64_t>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

Rational determinant(RationalMatrix m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Exact rank by fraction-free (Bareiss) elimination on 128-bit integers.
/// Returns nullopt if an intermediate minor would overflow.
std::optional<std::size_t> integer_rank(const IntMatrix& m);

/// Converts an integer-valued rational matrix; nullopt if any entry has a
/// denominator other than 1.
std::optional<IntMatrix> to_integer(const RationalMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace qlab
