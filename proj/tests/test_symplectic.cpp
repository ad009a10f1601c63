#include <cmath>

#include "doctest.h"
#include "gsep/errors.hpp"
#include "gsep/families.hpp"
#include "gsep/symplectic.hpp"
#include "test_support.hpp"

using namespace gsep;

TEST_CASE("symplectic form") {
  const Matrix omega = symplectic_form(3);
  CHECK(omega.transpose() == -1.0 * omega);
  CHECK(max_abs_diff(omega * omega, -1.0 * Matrix::identity(6)) == 0.0);
  CHECK(omega(0, 1) == 1.0);
  CHECK(omega(1, 0) == -1.0);
}

TEST_CASE("spectrum of the two-mode vacuum") {
  const auto s = symplectic_spectrum(SymMatrix(0.5 * Matrix::identity(4)));
  REQUIRE(s.size() == 2);
  CHECK_NEAR(s.max(), 0.5, 1e-15);
  CHECK_NEAR(s.min(), 0.5, 1e-15);
  CHECK(s.source_dim() == 4);
}

TEST_CASE("spectrum of the squeezed thermal state at r=2, T=1") {
  const auto s = symplectic_spectrum(squeezed_thermal({2.0, 1.0}));
  const double expected = 0.5 / std::tanh(0.5);
  CHECK_NEAR(s.max(), expected, 1e-12);
  CHECK_NEAR(s.min(), expected, 1e-12);
  CHECK_NEAR(expected, 1.08198, 1e-5);
}

TEST_CASE("spectrum of the beam-splitter mixture at eta=4, T=5") {
  // beta = 0.2
  const auto s = symplectic_spectrum(beam_splitter_mix({4.0, 5.0}));
  CHECK_NEAR(s.min(), 0.5, 1e-10);
  CHECK_NEAR(s.max(), 0.5 / std::tanh(0.1), 1e-10);
}

TEST_CASE("two-mode closed form") {
  auto s = two_mode_spectrum_closed_form(SymMatrix(0.5 * Matrix::identity(4)));
  CHECK_NEAR(s.max(), 0.5, 1e-15);
  CHECK_NEAR(s.min(), 0.5, 1e-15);

  // f, g, h entered directly rather than through the waveguide constructor.
  const double f = 0.7, g = 0.1, h = 0.3;
  const Matrix v{{f, g, h, 0}, {g, f, 0, -h}, {h, 0, f, g}, {0, -h, g, f}};
  s = two_mode_spectrum_closed_form(SymMatrix(v));
  CHECK_NEAR(s.max(), std::sqrt(0.39), 1e-12);
  CHECK_NEAR(s.min(), std::sqrt(0.39), 1e-12);
  CHECK_NEAR(std::sqrt(0.39), 0.62450, 1e-5);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Matrix sm = make_test_symplectic(2, seed);
    s = two_mode_spectrum_closed_form(SymMatrix(0.5 * (sm * sm.transpose())));
    CHECK_NEAR(s.max(), 0.5, 1e-10);
    CHECK_NEAR(s.min(), 0.5, 1e-10);
  }
}

TEST_CASE("two-mode closed form rejects invalid input") {
  CHECK_THROWS_AS(two_mode_spectrum_closed_form(SymMatrix(Matrix::identity(2))), DimensionError);
  // Strongly indefinite: Delta^2 - 4 det V < 0.
  const Matrix bad{{2.0, 0.0, -1.5, 0.0},
                   {0.0, -1.0, 0.5, -0.5},
                   {-1.5, 0.5, -2.0, -1.5},
                   {0.0, -0.5, -1.5, 2.0}};
  CHECK_THROWS_AS(two_mode_spectrum_closed_form(SymMatrix(bad)), NegativeDiscriminant);
}

TEST_CASE("closed form agrees with the generic spectrum on random two-mode states") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto st = testing::random_state(2, seed);
    const SymMatrix v(st.v);
    const auto numeric = symplectic_spectrum(v);
    const auto closed = two_mode_spectrum_closed_form(v);
    CHECK_NEAR(numeric.max(), closed.max(), 1e-10);
    CHECK_NEAR(numeric.min(), closed.min(), 1e-10);
  }
}

TEST_CASE("make_test_symplectic") {
  const Matrix id = rotation(1, 0, 0.7) * rotation(1, 0, -0.7);
  CHECK(max_abs_diff(id, Matrix::identity(2)) <= 1e-15);

  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const Matrix omega = symplectic_form(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Matrix s = make_test_symplectic(n, seed);
      CHECK(max_abs_diff(s * omega * s.transpose(), omega) <= 1e-10);
      CHECK_NEAR(s.determinant(), 1.0, 1e-10);
    }
  }
  CHECK(make_test_symplectic(3, 42) == make_test_symplectic(3, 42));
}

TEST_CASE("symplectic invariance of the spectrum") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto st = testing::random_state(n, seed + 1000 * n);
      const auto base = symplectic_spectrum(SymMatrix(st.v));
      const Matrix s = make_test_symplectic(n, seed + 7);
      const auto moved = symplectic_spectrum(SymMatrix(s * st.v * s.transpose()));
      for (std::size_t k = 0; k < n; ++k) {
        CHECK_NEAR(base.values()[k], st.nu[k], 1e-8);
        CHECK_NEAR(moved.values()[k], base.values()[k], 1e-8);
      }
    }
  }
}

TEST_CASE("spectrum errors") {
  CHECK_THROWS_AS(symplectic_spectrum(SymMatrix{{1.0, 0.0}, {0.0, -1.0}}), NotPositiveDefinite);
  CHECK_THROWS_AS(SymplecticSpectrum({}), DimensionError);
}
