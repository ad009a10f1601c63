#include <cmath>

#include "doctest.h"
#include "gsep/errors.hpp"
#include "gsep/linalg.hpp"
#include "test_support.hpp"

using namespace gsep;

namespace {

Matrix reconstruct(const EigenDecomposition& e) {
  return e.vectors * Matrix::diagonal(e.values) * e.vectors.transpose();
}

}  // namespace

TEST_CASE("SymMatrix symmetrizes and rejects odd or empty dimensions") {
  const SymMatrix s(Matrix{{1.0, 2.0}, {4.0, 3.0}});
  CHECK(s(0, 1) == 3.0);
  CHECK(s(1, 0) == 3.0);
  CHECK_THROWS_AS(SymMatrix(Matrix(3, 3)), DimensionError);
  CHECK_THROWS_AS(SymMatrix(Matrix(0, 0)), DimensionError);
  CHECK_THROWS_AS(SymMatrix(Matrix(2, 4)), DimensionError);
}

TEST_CASE("eigendecomposition of the identity") {
  const auto e = sym_eigendecomposition(SymMatrix(Matrix::identity(4)));
  for (double v : e.values) CHECK(v == 1.0);
  CHECK(e.vectors == Matrix::identity(4));
}

TEST_CASE("eigendecomposition of diag(3, 1) and [[2,1],[1,2]]") {
  auto e = sym_eigendecomposition(SymMatrix{{3.0, 0.0}, {0.0, 1.0}});
  CHECK(e.values[0] == 3.0);
  CHECK(e.values[1] == 1.0);

  // (tr +- sqrt(tr^2 - 4 det)) / 2 with tr = 4, det = 3.
  const double tr = 4.0, det = 3.0;
  const double disc = std::sqrt(tr * tr - 4.0 * det);
  e = sym_eigendecomposition(SymMatrix{{2.0, 1.0}, {1.0, 2.0}});
  CHECK_NEAR(e.values[0], 0.5 * (tr + disc), 1e-14);
  CHECK_NEAR(e.values[1], 0.5 * (tr - disc), 1e-14);
}

TEST_CASE("Jacobi residual and orthogonality bounds on random matrices") {
  for (std::size_t n : {2u, 4u, 6u, 8u, 12u, 16u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matrix m = testing::random_symmetric(n, seed * 31 + n);
      const auto e = sym_eigendecomposition(SymMatrix(m));
      CHECK(max_abs_diff(e.vectors * e.vectors.transpose(), Matrix::identity(n)) <= 1e-12);
      CHECK(max_abs_diff(reconstruct(e), m) <= 1e-10 * m.max_abs());
      for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);
    }
  }
}

TEST_CASE("eigensolver rejects oversized input") {
  CHECK_THROWS_AS(sym_eigendecomposition(SymMatrix(Matrix::identity(66))), DimensionError);
}

TEST_CASE("pd_sqrt") {
  CHECK(max_abs_diff(pd_sqrt(SymMatrix(Matrix::identity(4))).matrix(), Matrix::identity(4)) == 0.0);

  const auto w = pd_sqrt(SymMatrix{{4.0, 0.0}, {0.0, 9.0}});
  CHECK(w(0, 0) == 2.0);
  CHECK(w(1, 1) == 3.0);
  CHECK(w(0, 1) == 0.0);

  const Matrix m{{2.0, 1.0}, {1.0, 2.0}};
  const auto r = pd_sqrt(SymMatrix(m)).matrix();
  CHECK(max_abs_diff(r * r, m) <= 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix a = testing::random_symmetric(6, seed);
    const Matrix spd = a * a.transpose() + 0.1 * Matrix::identity(6);
    const auto root = pd_sqrt(SymMatrix(spd)).matrix();
    CHECK(max_abs_diff(root * root, spd) <= 1e-9 * spd.max_abs());
  }
}

TEST_CASE("pd_sqrt rejects matrices that are not positive definite") {
  CHECK_THROWS_AS(pd_sqrt(SymMatrix{{1.0, 0.0}, {0.0, 0.0}}), NotPositiveDefinite);
  CHECK_THROWS_AS(pd_sqrt(SymMatrix{{1.0, 2.0}, {2.0, 1.0}}), NotPositiveDefinite);
}

TEST_CASE("determinant") {
  CHECK(Matrix{{1.0, 2.0}, {3.0, 4.0}}.determinant() == doctest::Approx(-2.0));
  const Matrix m = testing::random_symmetric(4, 7);
  CHECK_NEAR(m.determinant(), testing::det4(m), 1e-12);
}
