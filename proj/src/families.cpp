#include "gsep/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

#include "gsep/errors.hpp"

namespace gsep {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

Family family_of(const FamilyParams& p) noexcept {
  return static_cast<Family>(p.index());
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::SqueezedThermal: return "squeezed-thermal";
    case Family::BeamSplitterMix: return "beam-splitter";
    case Family::Waveguide: return "waveguide";
  }
  return "unknown";
}

void validate(const SqueezedThermalParams& p) {
  require(std::isfinite(p.r) && p.r >= 0.0, "squeezing r must be finite and >= 0");
  require(std::isfinite(p.T) && p.T > 0.0, "temperature T must be finite and > 0");
}

void validate(const BeamSplitterMixParams& p) {
  require(std::isfinite(p.eta), "squeezing eta must be finite");
  require(std::isfinite(p.T) && p.T > 0.0, "temperature T must be finite and > 0");
}

void validate(const WaveguideParams& p) {
  require(std::isfinite(p.r) && p.r >= 0.0, "squeezing r must be finite and >= 0");
  require(std::isfinite(p.gamma_over_J) && p.gamma_over_J >= 0.0, "gamma/J must be finite and >= 0");
  require(std::isfinite(p.theta) && p.theta >= 0.0, "scaled time theta must be finite and >= 0");
}

double thermal_coth(double T) {
  require(T > 0.0, "temperature T must be > 0");
  // coth(x) = 1 + 2 / (e^{2x} - 1) with x = beta / 2 = 1 / (2T).
  return 1.0 + 2.0 / std::expm1(1.0 / T);
}

CovarianceMatrix squeezed_thermal(const SqueezedThermalParams& p) {
  validate(p);
  const double s = 0.5 * thermal_coth(p.T);
  const double ch = s * std::cosh(p.r);
  const double sh = s * std::sinh(p.r);
  return CovarianceMatrix(Matrix{
      {ch, 0.0, sh, 0.0},
      {0.0, ch, 0.0, -sh},
      {sh, 0.0, ch, 0.0},
      {0.0, -sh, 0.0, ch},
  });
}

CovarianceMatrix beam_splitter_mix(const BeamSplitterMixParams& p) {
  validate(p);
  const double a = thermal_coth(p.T);
  const double b = std::exp(p.eta);
  const double xx = 0.25 * (a + b);
  const double pp = 0.25 * (a + 1.0 / b);
  const double xc = 0.25 * (a - b);
  const double pc = 0.25 * (a - 1.0 / b);
  return CovarianceMatrix(Matrix{
      {xx, 0.0, xc, 0.0},
      {0.0, pp, 0.0, pc},
      {xc, 0.0, xx, 0.0},
      {0.0, pc, 0.0, pp},
  });
}

WaveguideCoefficients waveguide_coefficients(const WaveguideParams& p) {
  validate(p);
  const double jt = std::numbers::pi * p.theta;
  const double gt = p.gamma_over_J * jt;
  const double damp = std::exp(-2.0 * gt);
  const double sh_half = std::sinh(0.5 * p.r);
  const double sh = std::sinh(p.r);
  return {
      0.5 + damp * sh_half * sh_half,
      -0.5 * damp * sh * std::sin(2.0 * jt),
      0.5 * damp * sh * std::cos(2.0 * jt),
  };
}

CovarianceMatrix waveguide_state(const WaveguideParams& p) {
  const auto [f, g, h] = waveguide_coefficients(p);
  return CovarianceMatrix(Matrix{
      {f, g, h, 0.0},
      {g, f, 0.0, -h},
      {h, 0.0, f, g},
      {0.0, -h, g, f},
  });
}

CovarianceMatrix build_state(const FamilyParams& p) {
  return std::visit(
      [](const auto& params) -> CovarianceMatrix {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, SqueezedThermalParams>) return squeezed_thermal(params);
        else if constexpr (std::is_same_v<P, BeamSplitterMixParams>) return beam_splitter_mix(params);
        else return waveguide_state(params);
      },
      p);
}

TwoModeSpectra squeezed_thermal_spectra(const SqueezedThermalParams& p) {
  validate(p);
  const double c = thermal_coth(p.T);
  return {0.5 * c, 0.5 * c, 0.5 * c * std::cosh(p.r)};
}

TwoModeSpectra beam_splitter_mix_spectra(const BeamSplitterMixParams& p) {
  validate(p);
  const double a = thermal_coth(p.T);
  const double b = std::exp(p.eta);
  return {std::max(0.5, 0.5 * a), std::min(0.5, 0.5 * a),
          0.25 * std::sqrt((a + b) * (a + 1.0 / b))};
}

TwoModeSpectra waveguide_spectra(const WaveguideParams& p) {
  const auto [f, g, h] = waveguide_coefficients(p);
  const double global = std::sqrt(f * f - g * g - h * h);
  return {global, global, std::sqrt(f * f - g * g)};
}

}  // namespace gsep
