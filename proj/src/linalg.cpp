// SPDX-License-Identifier: Apache-2.0

#include "gradalg/linalg.hpp"

#include <utility>

#include "gradalg/errors.hpp"

namespace gradalg {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) {
    throw InvariantError("solve: right-hand side length mismatch");
  }
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RowEchelon ech = row_reduce(std::move(aug));
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    if (ech.pivots[k] == m.cols()) return std::nullopt;
    x[ech.pivots[k]] = ech.reduced(k, m.cols());
  }
  return x;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
      v[ech.pivots[k]] = -ech.reduced(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gradalg
