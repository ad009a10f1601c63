#pragma once

#include <string_view>
#include <variant>

#include "gsep/gaussian_state.hpp"

namespace gsep {

// All parameters are dimensionless (hbar = omega = k_B = 1); beta = 1 / T.

/// Two thermal modes at temperature T under two-mode squeezing r.
struct SqueezedThermalParams {
  double r = 0.0;
  double T = 1.0;
};

/// Single-mode squeezed state (b = e^eta) mixed with a thermal mode
/// (a = coth(beta/2)) on a 50:50 beam splitter.
struct BeamSplitterMixParams {
  double eta = 0.0;
  double T = 1.0;
};

/// Two-mode squeezed vacuum after propagation through two coupled leaky
/// waveguides. Time enters only as theta = J t / pi and the ratio gamma / J.
struct WaveguideParams {
  double r = 0.0;
  double gamma_over_J = 0.0;
  double theta = 0.0;
};

using FamilyParams = std::variant<SqueezedThermalParams, BeamSplitterMixParams, WaveguideParams>;

enum class Family { SqueezedThermal, BeamSplitterMix, Waveguide };

Family family_of(const FamilyParams& p) noexcept;
std::string_view family_name(Family f) noexcept;

void validate(const SqueezedThermalParams& p);
void validate(const BeamSplitterMixParams& p);
void validate(const WaveguideParams& p);

/// coth(1 / (2T)) evaluated as 1 + 2 / expm1(1 / T); exact 1 as T -> 0+.
double thermal_coth(double T);

CovarianceMatrix squeezed_thermal(const SqueezedThermalParams& p);
CovarianceMatrix beam_splitter_mix(const BeamSplitterMixParams& p);
CovarianceMatrix waveguide_state(const WaveguideParams& p);
CovarianceMatrix build_state(const FamilyParams& p);

struct WaveguideCoefficients {
  double f;
  double g;
  double h;
};

WaveguideCoefficients waveguide_coefficients(const WaveguideParams& p);

/// Analytic global and local (mode 0) symplectic eigenvalues of each family.
struct TwoModeSpectra {
  double global_hi;
  double global_lo;
  double local;
};

TwoModeSpectra squeezed_thermal_spectra(const SqueezedThermalParams& p);
TwoModeSpectra beam_splitter_mix_spectra(const BeamSplitterMixParams& p);
TwoModeSpectra waveguide_spectra(const WaveguideParams& p);

}  // namespace gsep
