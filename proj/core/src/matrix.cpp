#include "quiverlab/matrix.hpp"

#include <utility>

namespace qlab {

__extension__ using wide_int = __int128;

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return RationalMatrix(0, 0);
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::optional<std::size_t> integer_rank(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<wide_int> a(rows * cols);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.data()[i];
  auto at = [&](std::size_t r, std::size_t c) -> wide_int& { return a[r * cols + c]; };

  wide_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const wide_int p = at(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const wide_int f = at(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        wide_int lhs;
        wide_int rhs;
        if (__builtin_mul_overflow(p, at(r, c), &lhs)) return std::nullopt;
        if (__builtin_mul_overflow(f, at(rank, c), &rhs)) return std::nullopt;
        wide_int diff;
        if (__builtin_sub_overflow(lhs, rhs, &diff)) return std::nullopt;
        at(r, c) = diff / prev;
      }
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::optional<IntMatrix> to_integer(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_integer()) return std::nullopt;
      out(r, c) = m(r, c).num();
    }
  }
  return out;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  }
  return out;
}

}  // namespace qlab
