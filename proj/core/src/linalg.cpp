#include "conesphere/linalg.hpp"

#include "conesphere/errors.hpp"

namespace conesphere {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = EisFrac(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const EisFrac& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const EisFrac& y = rhs.at(k, j);
        if (y.is_zero()) continue;
        out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix Matrix::conj_transpose() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

bool Matrix::is_zero() const {
  for (const EisFrac& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) { pr = i; break; }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
    }
    EisFrac inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      EisFrac f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix null_space(const Matrix& m) {
  Matrix red = m;
  std::vector<int> pivots = rref(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), int(free_cols.size()));
  for (int k = 0; k < int(free_cols.size()); ++k) {
    int fc = free_cols[k];
    basis.at(fc, k) = EisFrac(1);
    for (int r = 0; r < int(pivots.size()); ++r) {
      basis.at(pivots[r], k) = -red.at(r, fc);
    }
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = EisFrac(1);
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() != n - 1)
    throw DimensionMismatch("singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

}  // namespace conesphere
