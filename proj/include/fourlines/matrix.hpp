#pragma once

// Small dense matrices over exact rationals.

#include <cstddef>
#include <optional>
#include <vector>

#include "fourlines/rational.hpp"

namespace fourlines {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix without_row_col(std::size_t row, std::size_t col) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by Gaussian elimination with nonzero pivot search. The 0x0
/// matrix has determinant 1.
Rational determinant(RationalMatrix m);

/// Solves m x = rhs. Returns nullopt if m is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> rhs);

/// True iff every leading principal minor is positive.
bool leading_minors_positive(RationalMatrix m);

}  // namespace fourlines
