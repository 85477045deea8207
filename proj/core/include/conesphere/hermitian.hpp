#pragma once

#include <vector>

#include "conesphere/developing.hpp"
#include "conesphere/eisenstein.hpp"
#include "conesphere/linalg.hpp"
#include "conesphere/triangulation.hpp"

namespace conesphere {

// Inertia indices of a Hermitian form: positive, negative, and null counts.
struct Signature {
  int positive{0};
  int negative{0};
  int zero{0};
  friend bool operator==(const Signature&, const Signature&) = default;
};

// The area form on the 3T-dimensional label space, scaled by 4*sqrt(3) so
// every entry lies in Z[w]: each positively oriented unit triangle
// contributes exactly 3 to the squared norm of its label vector. The
// convention is H(V, W) = V^dagger * H * W.
Matrix area_form_ambient(const Triangulation& t);

// H restricted to chart coordinates: B^dagger * H_amb * B.
Matrix restrict_form(const Matrix& ambient, const ModuliChart& chart);

// Exact signature by congruence reduction: real diagonal pivots are
// eliminated Schur-style; a zero diagonal with a nonzero off-diagonal entry
// is turned into a positive pivot by a hyperbolic column/row shear; whatever
// remains is null.
Signature signature(const Matrix& h);

// V^dagger * H * V for Hermitian h; the result is provably real and is
// returned as a rational. Throws DimensionMismatch.
BigRat evaluate(const Matrix& h, const std::vector<EisFrac>& v);

// Sesquilinear extension x^dagger * H * y.
EisFrac evaluate_pair(const Matrix& h, const std::vector<EisFrac>& x,
                      const std::vector<EisFrac>& y);

// True iff M^dagger * H1 * M == H2 exactly. Throws DimensionMismatch.
bool congruence_check(const Matrix& h1, const Matrix& h2, const Matrix& m);

bool is_hermitian(const Matrix& h);

// True iff every entry lies in Z[w].
bool entries_integral(const Matrix& h);

}  // namespace conesphere
