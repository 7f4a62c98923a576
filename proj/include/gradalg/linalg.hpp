// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_LINALG_HPP
#define GRADALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradalg/scalar.hpp"

namespace gradalg {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transposed() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; `pivots[k]` is the pivot column of row k.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Some solution of m * x = rhs (free variables set to zero), or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> rhs);

/// Basis of {x : m * x = 0}, one vector per free column, with that column
/// set to one.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

}  // namespace gradalg

#endif  // GRADALG_LINALG_HPP
