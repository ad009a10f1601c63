#include <cmath>

#include "doctest.h"
#include "gsep/entropy.hpp"
#include "gsep/errors.hpp"
#include "gsep/families.hpp"
#include "test_support.hpp"

using namespace gsep;

namespace {

constexpr double kSpectrumTol = 1e-10;

void check_spectra(const CovarianceMatrix& v, const TwoModeSpectra& expected) {
  const auto global = symplectic_spectrum(v);
  const auto local = symplectic_spectrum(reduce(v, {0}));
  CHECK_NEAR(global.max(), expected.global_hi, kSpectrumTol);
  CHECK_NEAR(global.min(), expected.global_lo, kSpectrumTol);
  CHECK_NEAR(local.max(), expected.local, kSpectrumTol);
}

}  // namespace

TEST_CASE("thermal_coth is accurate at both ends") {
  CHECK(thermal_coth(1e-6) == 1.0);
  CHECK(thermal_coth(1e-3) == 1.0);
  // coth(x) = 1/x + x/3 - x^3/45 + ... for x = 1/(2T) small.
  const double x = 1.0 / 200.0;
  CHECK_NEAR(thermal_coth(100.0), 1.0 / x + x / 3.0 - x * x * x / 45.0, 1e-12);
  CHECK_NEAR(thermal_coth(1.0), 1.0 / std::tanh(0.5), 1e-15);
  CHECK_THROWS_AS(thermal_coth(0.0), InvalidParameter);
}

TEST_CASE("squeezed thermal state") {
  const CovarianceMatrix vac = squeezed_thermal({0.0, 1e-6});
  CHECK(max_abs_diff(vac.matrix().matrix(), 0.5 * Matrix::identity(4)) <= 1e-6);

  for (double T : {0.2, 1.0, 3.0, 40.0}) {
    const double c = 1.0 / std::tanh(0.5 / T);
    check_spectra(squeezed_thermal({2.0, T}), {0.5 * c, 0.5 * c, 0.5 * c * std::cosh(2.0)});
  }

  const auto cold = squeezed_thermal({2.0, 1e-6});
  const auto local = symplectic_spectrum(reduce(cold, {0}));
  CHECK_NEAR(local.max(), std::cosh(2.0) / 2.0, 1e-12);
  CHECK_NEAR(local.max(), 1.88110, 1e-5);
  for (double q : {0.5, 2.0, 3.0}) {
    CHECK_NEAR(tr_rho_power(local, q), testing::schmidt_trace(2.0, q), 1e-10);
  }
}

TEST_CASE("beam-splitter mixture") {
  CHECK(max_abs_diff(beam_splitter_mix({0.0, 1e-6}).matrix().matrix(), 0.5 * Matrix::identity(4)) <= 1e-12);

  for (double T : {0.3, 1.0, 9.1, 27.3, 80.0}) {
    const double a = 1.0 / std::tanh(0.5 / T), b = std::exp(4.0);
    check_spectra(beam_splitter_mix({4.0, T}),
                  {0.5 * a, 0.5, 0.25 * std::sqrt((a + b) * (a + 1.0 / b))});
  }
}

TEST_CASE("waveguide state") {
  const auto pure = symplectic_spectrum(waveguide_state({1.8, 0.1, 0.0}));
  CHECK_NEAR(pure.max(), 0.5, 1e-12);
  CHECK_NEAR(pure.min(), 0.5, 1e-12);

  const WaveguideParams p{1.8, 0.1, 0.1};
  const auto [f, g, h] = waveguide_coefficients(p);
  // Coefficients recomputed from J t = pi theta, gamma t = (gamma/J) J t.
  const double jt = M_PI * 0.1, gt = 0.1 * jt;
  CHECK_NEAR(f, 0.5 + std::exp(-2 * gt) * std::pow(std::sinh(0.9), 2), 1e-15);
  CHECK_NEAR(g, -0.5 * std::exp(-2 * gt) * std::sinh(1.8) * std::sin(2 * jt), 1e-15);
  CHECK_NEAR(h, 0.5 * std::exp(-2 * gt) * std::sinh(1.8) * std::cos(2 * jt), 1e-15);
  check_spectra(waveguide_state(p),
                {std::sqrt(f * f - g * g - h * h), std::sqrt(f * f - g * g - h * h), std::sqrt(f * f - g * g)});

  for (double theta : {0.0, 0.3, 0.77}) {
    CHECK(waveguide_state({0.0, 0.4, theta}).matrix().matrix() == 0.5 * Matrix::identity(4));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(squeezed_thermal({-0.1, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(squeezed_thermal({1.0, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(squeezed_thermal({1.0, -2.0}), InvalidParameter);
  CHECK_THROWS_AS(beam_splitter_mix({1.0, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(beam_splitter_mix({NAN, 1.0}), InvalidParameter);
  CHECK_NOTHROW(beam_splitter_mix({-2.0, 1.0}));
  CHECK_THROWS_AS(waveguide_state({1.0, -0.1, 0.1}), InvalidParameter);
  CHECK_THROWS_AS(waveguide_state({1.0, 0.1, -0.1}), InvalidParameter);
}

TEST_CASE("constructed states are physical and match their analytic spectra over parameter grids") {
  const double temps[] = {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0};
  for (double r = 0.0; r <= 5.0; r += 0.5) {
    for (double T : temps) {
      const SqueezedThermalParams st{r, T};
      CHECK(validate_state(squeezed_thermal(st)).physical);
      check_spectra(squeezed_thermal(st), squeezed_thermal_spectra(st));

      const BeamSplitterMixParams bs{r, T};
      CHECK(validate_state(beam_splitter_mix(bs)).physical);
      check_spectra(beam_splitter_mix(bs), beam_splitter_mix_spectra(bs));
    }
    for (double gj = 0.0; gj <= 1.0; gj += 0.25) {
      for (double theta = 0.0; theta <= 1.0; theta += 0.05) {
        const WaveguideParams wg{r, gj, theta};
        CHECK(validate_state(waveguide_state(wg)).physical);
        check_spectra(waveguide_state(wg), waveguide_spectra(wg));
      }
    }
  }
}

TEST_CASE("build_state dispatches on the family") {
  CHECK(build_state(SqueezedThermalParams{1.0, 2.0}) == squeezed_thermal({1.0, 2.0}));
  CHECK(build_state(BeamSplitterMixParams{1.0, 2.0}) == beam_splitter_mix({1.0, 2.0}));
  CHECK(build_state(WaveguideParams{1.0, 0.1, 0.2}) == waveguide_state({1.0, 0.1, 0.2}));
  CHECK(family_of(WaveguideParams{}) == Family::Waveguide);
  CHECK(family_name(Family::BeamSplitterMix) == "beam-splitter");
}
