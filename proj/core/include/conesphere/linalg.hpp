#pragma once

#include <vector>

#include "conesphere/eisenstein.hpp"

namespace conesphere {

// Dense row-major matrix over Q(w). Small sizes only; all arithmetic exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  EisFrac& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const EisFrac& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  [[nodiscard]] Matrix operator*(const Matrix& rhs) const;
  [[nodiscard]] Matrix conj_transpose() const;
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

  [[nodiscard]] bool is_zero() const;

 private:
  int rows_{0};
  int cols_{0};
  std::vector<EisFrac> data_;
};

// In-place reduced row echelon form; returns the pivot columns (rank = count).
std::vector<int> rref(Matrix& m);

// Basis of the right null space, one column per free variable, in ascending
// free-column order. Result has m.cols() rows.
Matrix null_space(const Matrix& m);

// Inverse of a square matrix; throws DimensionMismatch when singular.
Matrix inverse(const Matrix& m);

}  // namespace conesphere
