#include "conesphere/hermitian.hpp"

#include <algorithm>

#include "conesphere/errors.hpp"

namespace conesphere {

Matrix area_form_ambient(const Triangulation& t) {
  int n = t.num_slots();
  Matrix h(n, n);
  EisFrac rt(EisInt::sqrt_minus_three());
  for (int tr = 0; tr < t.num_triangles(); ++tr) {
    // 4*sqrt(3) * area = sqrt(-3) * (z*conj(w) - conj(z)*w) for consecutive
    // CCW edge labels z, w of the triangle
    h.at(3 * tr + 1, 3 * tr) += rt;
    h.at(3 * tr, 3 * tr + 1) -= rt;
  }
  return h;
}

Matrix restrict_form(const Matrix& ambient, const ModuliChart& chart) {
  return chart.basis.conj_transpose() * (ambient * chart.basis);
}

Signature signature(const Matrix& hin) {
  if (hin.rows() != hin.cols()) throw DimensionMismatch("signature of non-square matrix");
  int d = hin.rows();
  Matrix h = hin;
  std::vector<int> alive(d);
  for (int i = 0; i < d; ++i) alive[i] = i;
  Signature sig;
  while (!alive.empty()) {
    int k = -1;
    for (int i : alive) {
      if (!h.at(i, i).is_zero()) { k = i; break; }
    }
    if (k < 0) {
      int oi = -1, oj = -1;
      for (int i : alive) {
        for (int j : alive) {
          if (i != j && !h.at(i, j).is_zero()) { oi = i; oj = j; break; }
        }
        if (oi >= 0) break;
      }
      if (oi < 0) {
        sig.zero += int(alive.size());
        break;
      }
      // shear col_i <- f*col_i + col_j, row_i <- conj(f)*row_i + row_j;
      // the (i, i) entry becomes 2*|f|^2 > 0 and the loop retries
      EisFrac f = h.at(oi, oj);
      for (int x : alive) h.at(x, oi) = f * h.at(x, oi) + h.at(x, oj);
      EisFrac fc = f.conj();
      for (int y : alive) h.at(oi, y) = fc * h.at(oi, y) + h.at(oj, y);
      continue;
    }
    EisFrac pivot = h.at(k, k);
    if (!pivot.is_real()) throw InternalInvariant("non-real diagonal entry");
    if (pivot.a > 0) ++sig.positive; else ++sig.negative;
    alive.erase(std::find(alive.begin(), alive.end(), k));
    EisFrac inv = pivot.inverse();
    for (int i : alive) {
      if (h.at(i, k).is_zero()) continue;
      EisFrac f = h.at(i, k) * inv;
      for (int j : alive) h.at(i, j) -= f * h.at(k, j);
    }
    for (int i : alive) {
      h.at(i, k) = EisFrac();
      h.at(k, i) = EisFrac();
    }
  }
  return sig;
}

EisFrac evaluate_pair(const Matrix& h, const std::vector<EisFrac>& x,
                      const std::vector<EisFrac>& y) {
  if (h.rows() != int(x.size()) || h.cols() != int(y.size()))
    throw DimensionMismatch("vector length differs from form dimension");
  EisFrac acc;
  for (int i = 0; i < h.rows(); ++i) {
    if (x[i].is_zero()) continue;
    EisFrac xc = x[i].conj();
    for (int j = 0; j < h.cols(); ++j) {
      if (h.at(i, j).is_zero() || y[j].is_zero()) continue;
      acc += xc * h.at(i, j) * y[j];
    }
  }
  return acc;
}

BigRat evaluate(const Matrix& h, const std::vector<EisFrac>& v) {
  EisFrac out = evaluate_pair(h, v, v);
  if (!out.is_real()) throw InternalInvariant("squared norm has nonzero imaginary part");
  return out.a;
}

bool congruence_check(const Matrix& h1, const Matrix& h2, const Matrix& m) {
  if (h1.rows() != h1.cols() || h2.rows() != h2.cols())
    throw DimensionMismatch("forms must be square");
  if (m.rows() != h1.rows() || m.cols() != h2.rows())
    throw DimensionMismatch("change-of-basis shape does not match the forms");
  return m.conj_transpose() * (h1 * m) == h2;
}

bool is_hermitian(const Matrix& h) {
  if (h.rows() != h.cols()) return false;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (!(h.at(i, j) == h.at(j, i).conj())) return false;
  return true;
}

bool entries_integral(const Matrix& h) {
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (!h.at(i, j).is_integral()) return false;
  return true;
}

}  // namespace conesphere
