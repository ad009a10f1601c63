#include <cmath>

#include "doctest.h"
#include "gsep/errors.hpp"
#include "gsep/families.hpp"
#include "gsep/gaussian_state.hpp"
#include "test_support.hpp"

using namespace gsep;

TEST_CASE("validate_state") {
  auto v = validate_state(CovarianceMatrix(0.5 * Matrix::identity(4)));
  CHECK(v.physical);
  CHECK(v.positive_definite);
  CHECK_NEAR(v.min_nu, 0.5, 1e-15);

  v = validate_state(CovarianceMatrix(0.4 * Matrix::identity(2)));
  CHECK_FALSE(v.physical);
  CHECK(v.positive_definite);
  CHECK_NEAR(v.min_nu, 0.4, 1e-15);

  // At t = 0 the waveguide state is pure: f^2 - h^2 = 1/4 by cosh^2 - sinh^2 = 1.
  v = validate_state(waveguide_state({1.8, 0.1, 0.0}));
  CHECK(v.physical);
  CHECK_NEAR(v.min_nu, 0.5, 1e-12);

  v = validate_state(CovarianceMatrix(Matrix{{1, 0, 2, 0}, {0, 1, 0, 0}, {2, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_FALSE(v.positive_definite);
  CHECK_FALSE(v.physical);
  CHECK(std::isnan(v.min_nu));
}

TEST_CASE("require_physical reports the minimum symplectic eigenvalue") {
  CHECK_NOTHROW(require_physical(CovarianceMatrix(0.5 * Matrix::identity(4))));
  try {
    require_physical(CovarianceMatrix(0.4 * Matrix::identity(2)));
    FAIL("expected UnphysicalState");
  } catch (const UnphysicalState& e) {
    CHECK(std::string(e.what()).find("0.4") != std::string::npos);
  }
}

TEST_CASE("CovarianceMatrix shape checks") {
  CHECK_THROWS_AS(CovarianceMatrix(Matrix::identity(3)), DimensionError);
  CHECK(CovarianceMatrix(Matrix::identity(6)).n_modes() == 3);
}

TEST_CASE("reduce extracts principal submatrices") {
  const double r = 1.3, T = 0.8;
  const double c = 1.0 / std::tanh(0.5 / T);
  const auto a = reduce(squeezed_thermal({r, T}), {0});
  CHECK(a.n_modes() == 1);
  CHECK_NEAR(a(0, 0), 0.5 * c * std::cosh(r), 1e-12);
  CHECK_NEAR(a(1, 1), 0.5 * c * std::cosh(r), 1e-12);
  CHECK(a(0, 1) == 0.0);
  CHECK_NEAR(symplectic_spectrum(a).min(), 0.5 * c * std::cosh(r), 1e-12);

  CHECK(reduce(CovarianceMatrix(0.5 * Matrix::identity(4)), {1}) ==
        CovarianceMatrix(0.5 * Matrix::identity(2)));

  const double eta = 4.0, T2 = 3.0;
  const double ca = 1.0 / std::tanh(0.5 / T2), b = std::exp(eta);
  const auto m = reduce(beam_splitter_mix({eta, T2}), {0});
  CHECK_NEAR(m(0, 0), (ca + b) / 4.0, 1e-12);
  CHECK_NEAR(m(1, 1), (ca + 1.0 / b) / 4.0, 1e-12);
  CHECK_NEAR(symplectic_spectrum(m).min(), 0.25 * std::sqrt((ca + b) * (ca + 1.0 / b)), 1e-12);
}

TEST_CASE("reduce composes exactly") {
  const auto st = testing::random_state(4, 11);
  const CovarianceMatrix v(st.v);
  // Modes {0, 2, 3} renumber to {0, 1, 2}; keeping {1, 2} of those is {2, 3}.
  CHECK(reduce(reduce(v, {0, 2, 3}), {1, 2}) == reduce(v, {2, 3}));
  CHECK(reduce(v, {3, 1}) == reduce(v, {1, 3}));
}

TEST_CASE("reduce and partial_transpose reject bad indices") {
  const CovarianceMatrix v(0.5 * Matrix::identity(4));
  CHECK_THROWS_AS(reduce(v, {}), IndexError);
  CHECK_THROWS_AS(reduce(v, {2}), IndexError);
  CHECK_THROWS_AS(reduce(v, {0, 0}), IndexError);
  CHECK_THROWS_AS(partial_transpose(v, {5}), IndexError);
  CHECK_THROWS_AS(partial_transpose(v, {}), IndexError);
}

TEST_CASE("marginals of physical states are physical") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CovarianceMatrix v(testing::random_state(3, seed).v);
    for (const auto& keep : std::vector<std::vector<std::size_t>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
      CHECK(validate_state(reduce(v, keep)).min_nu >= 0.5 - kPhysicalTol);
    }
  }
}

TEST_CASE("partial transpose") {
  const CovarianceMatrix product(Matrix::diagonal(std::vector<double>{0.7, 0.9, 1.5, 0.6}));
  CHECK(partial_transpose(product, {1}) == product);

  const double r = 2.0, T = 1.0;
  const double c = 1.0 / std::tanh(0.5 / T);
  const auto pt = partial_transpose(squeezed_thermal({r, T}), {1});
  CHECK_NEAR(symplectic_spectrum(pt).min(), 0.5 * std::exp(-r) * c, 1e-12);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CovarianceMatrix v(testing::random_state(2, seed).v);
    const auto once = partial_transpose(v, {1});
    CHECK(partial_transpose(once, {1}) == v);
    CHECK(max_asymmetry(once.matrix().matrix()) == 0.0);
    CHECK_NOTHROW(pd_sqrt(once.matrix()));
  }
}

TEST_CASE("beam-splitter conjugation reproduces the mixed state") {
  for (double eta : {0.0, 0.5, 2.0, 4.0}) {
    for (double T : {0.1, 1.0, 9.1, 50.0}) {
      const double a = 1.0 / std::tanh(0.5 / T), b = std::exp(eta);
      const Matrix in = Matrix::diagonal(std::vector<double>{b / 2, 1 / (2 * b), a / 2, a / 2});
      const Matrix bs = beam_splitter_50_50(2, 0, 1);
      const Matrix out = bs * in * bs.transpose();
      CHECK(max_abs_diff(out, beam_splitter_mix({eta, T}).matrix().matrix()) <= 1e-12 * std::max(1.0, out.max_abs()));
    }
  }
}

TEST_CASE("ModePartition") {
  const auto p = ModePartition::with_a(3, {2});
  CHECK(p.a() == std::vector<std::size_t>{2});
  CHECK(p.b() == std::vector<std::size_t>{0, 1});
  CHECK(p.swapped().a() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(ModePartition({0}, {0, 1}), IndexError);
  CHECK_THROWS_AS(ModePartition({0}, {}), IndexError);
  CHECK_THROWS_AS(ModePartition({0}, {2}), IndexError);
}
