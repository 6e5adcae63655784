#include "fourlines/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace fourlines {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::without_row_col(std::size_t row, std::size_t col) const {
  RationalMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    const Rational inv = m(k, k).reciprocal();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= f * m(k, c);
      }
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      std::swap(rhs[k], rhs[pivot]);
    }
    const Rational inv = m(k, k).reciprocal();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= f * m(k, c);
      }
      rhs[r] -= f * rhs[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) {
      if (!m(i, c).is_zero()) s -= m(i, c) * x[c];
    }
    x[i] = s / m(i, i);
  }
  return x;
}

bool leading_minors_positive(RationalMatrix m) {
  // Without pivoting the k-th pivot is minor_k / minor_{k-1}.
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).sign() <= 0) return false;
    const Rational inv = m(k, k).reciprocal();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= f * m(k, c);
      }
    }
  }
  return true;
}

}  // namespace fourlines
