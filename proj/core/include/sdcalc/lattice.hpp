#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "sdcalc/integer.hpp"

namespace sdcalc {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;

  IntMatrix transpose() const;
  bool is_symmetric() const;
  bool is_identity() const;

  std::vector<Int> apply(std::span<const Int> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Result of unimodular column reduction: `form == input * transform`,
/// `transform * inverse == I`. The first `rank` columns of `form` carry the
/// pivots (positive, strictly descending row staircase); the remaining
/// columns of `form` are zero, so the matching columns of `transform` are an
/// integer basis of the kernel.
struct ColumnEchelon {
  IntMatrix form;
  IntMatrix transform;
  IntMatrix inverse;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Integer basis of {x : a x = 0}, one basis vector per column.
IntMatrix kernel_basis(const IntMatrix& a);

/// Unimodular `u` with u * v = g e_1, where g = gcd(v) >= 0.
struct VectorReduction {
  IntMatrix transform;
  IntMatrix inverse;
  Int gcd;
};

VectorReduction reduce_vector(std::span<const Int> v);

}  // namespace sdcalc
