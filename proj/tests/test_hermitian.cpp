#include "conesphere/hermitian.hpp"

#include <vector>

#include "conesphere/catalog.hpp"
#include "conesphere/developing.hpp"
#include "conesphere/errors.hpp"
#include "doctest.h"

using namespace conesphere;

namespace {

Matrix restricted(const Triangulation& t, int seed = 0) {
  return restrict_form(area_form_ambient(t), moduli_chart(t, seed));
}

}  // namespace

TEST_CASE("ambient form couples the first two labels of each triangle") {
  Triangulation t = double_triangle().triangulation;
  Matrix h = area_form_ambient(t);
  REQUIRE(h.rows() == 6);
  REQUIRE(h.cols() == 6);
  EisFrac rt(EisInt::sqrt_minus_three());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      EisFrac expected;
      if ((i == 1 && j == 0) || (i == 4 && j == 3)) expected = rt;
      if ((i == 0 && j == 1) || (i == 3 && j == 4)) expected = -rt;
      CHECK(h.at(i, j) == expected);
    }
  CHECK(is_hermitian(h));
  CHECK(entries_integral(h));
  // each unit triangle contributes 3 to its own squared area
  std::vector<EisFrac> one_triangle = {EisFrac(1), EisFrac(EisInt::omega()),
                                       EisFrac(EisInt(0, -1) - EisInt(1, 0)),
                                       EisFrac(0), EisFrac(0), EisFrac(0)};
  CHECK(evaluate(h, one_triangle) == 3);
}

TEST_CASE("frozen restricted forms") {
  Matrix dt = restricted(double_triangle().triangulation);
  REQUIRE(dt.rows() == 1);
  CHECK(dt.at(0, 0) == EisFrac(6));

  Matrix tet = restricted(tetrahedron().triangulation);
  REQUIRE(tet.rows() == 2);
  CHECK(tet.at(0, 0) == EisFrac(0));
  CHECK(tet.at(0, 1) == EisFrac(EisInt(-4, -8)));
  CHECK(tet.at(1, 0) == EisFrac(EisInt(4, 8)));
  CHECK(tet.at(1, 1) == EisFrac(0));

  Matrix oct = restricted(octahedron().triangulation);
  REQUIRE(oct.rows() == 4);
  CHECK(oct.at(0, 0) == EisFrac(-6));
  CHECK(oct.at(0, 1) == EisFrac(0));
  CHECK(oct.at(0, 2) == EisFrac(6));
  CHECK(oct.at(0, 3) == EisFrac(EisInt(6, 6)));

  for (Matrix* m : {&dt, &tet, &oct}) {
    CHECK(is_hermitian(*m));
    CHECK(entries_integral(*m));
  }
}

TEST_CASE("signatures and norms of the classical surfaces") {
  struct Row {
    CatalogEntry entry;
    Signature sig;
  };
  std::vector<Row> rows = {{double_triangle(), {1, 0, 0}},
                           {tetrahedron(), {1, 1, 0}},
                           {octahedron(), {1, 3, 0}},
                           {icosahedron(), {1, 9, 0}}};
  for (const Row& row : rows) {
    const Triangulation& t = row.entry.triangulation;
    ModuliChart chart = moduli_chart(t, 0);
    Matrix h = restrict_form(area_form_ambient(t), chart);
    CHECK(signature(h) == row.sig);
    CHECK(evaluate(h, chart.own_coords) == 3 * t.num_triangles());
  }
}

TEST_CASE("signature handles null and hyperbolic blocks") {
  Matrix zero(3, 3);
  CHECK(signature(zero) == Signature{0, 0, 3});

  Matrix hyp(2, 2);
  hyp.at(0, 1) = EisFrac(1);
  hyp.at(1, 0) = EisFrac(1);
  CHECK(signature(hyp) == Signature{1, 1, 0});

  Matrix mixed(3, 3);
  mixed.at(0, 1) = EisFrac(EisInt::omega());
  mixed.at(1, 0) = EisFrac(EisInt::omega()).conj();
  CHECK(signature(mixed) == Signature{1, 1, 1});

  Matrix diag(2, 2);
  diag.at(0, 0) = EisFrac(BigRat(5, 7), BigRat(0));
  diag.at(1, 1) = EisFrac(-3);
  CHECK(signature(diag) == Signature{1, 1, 0});
}

TEST_CASE("pair evaluation is sesquilinear and conjugate symmetric") {
  Matrix h = restricted(tetrahedron().triangulation);
  std::vector<EisFrac> x = {EisFrac(1), EisFrac(EisInt::omega())};
  std::vector<EisFrac> y = {EisFrac(EisInt(2, -1)), EisFrac(BigRat(1, 3), BigRat(1))};
  CHECK(evaluate_pair(h, x, y) == evaluate_pair(h, y, x).conj());
  CHECK(evaluate_pair(h, x, x).is_real());
  CHECK(evaluate(h, x) == 12);
  CHECK_THROWS_AS(evaluate(h, std::vector<EisFrac>{EisFrac(1)}), DimensionMismatch);
}

TEST_CASE("congruence check is exact") {
  Matrix h = restricted(octahedron().triangulation);
  CHECK(congruence_check(h, h, Matrix::identity(4)));
  Matrix twice = Matrix::identity(4);
  for (int i = 0; i < 4; ++i) twice.at(i, i) = EisFrac(2);
  CHECK_FALSE(congruence_check(h, h, twice));
  CHECK_THROWS_AS(congruence_check(h, h, Matrix::identity(3)), DimensionMismatch);
}

TEST_CASE("chart changes are isometries of the restricted form") {
  for (const CatalogEntry& entry : {tetrahedron(), icosahedron()}) {
    const Triangulation& t = entry.triangulation;
    ModuliChart c0 = moduli_chart(t, 0);
    ModuliChart c1 = moduli_chart(t, 1);
    Matrix h0 = restrict_form(area_form_ambient(t), c0);
    Matrix h1 = restrict_form(area_form_ambient(t), c1);
    Matrix m = chart_change(t, c0, c1);
    CHECK(congruence_check(h1, h0, m));  // M^dagger H1 M == H0
    CHECK(evaluate(h1, c1.own_coords) == evaluate(h0, c0.own_coords));
  }
}

TEST_CASE("pivot coordinates are not always integral off the catalog") {
  int non_integral = 0;
  std::vector<Triangulation> all = enumerate_positive(8);
  REQUIRE(all.size() == 26);
  for (const Triangulation& t : all) {
    Matrix h = restricted(t);
    if (!entries_integral(h)) ++non_integral;
    CHECK(is_hermitian(h));
  }
  CHECK(non_integral == 7);
}

TEST_CASE("subdividing can push the restricted form off the lattice") {
  // the surface's own labels stay in the lattice, but the chart basis picks up
  // denominators on most subdivided surfaces
  CHECK(entries_integral(restricted(subdivide(tetrahedron().triangulation))));
  CHECK_FALSE(entries_integral(restricted(subdivide(octahedron().triangulation))));
  CHECK_FALSE(entries_integral(restricted(subdivide(bipyramid(2).triangulation))));
}
