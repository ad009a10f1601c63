#include "gsep/entropy.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "gsep/errors.hpp"
#include "gsep/families.hpp"

namespace gsep {

namespace {

constexpr double kVonNeumannSnap = 1e-6;
constexpr double kLogSpaceAboveQ = 50.0;
constexpr double kSpectrumTol = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "q must be finite and > 0, got " << q;
    throw DomainError(msg.str());
  }
}

// nu clamped to 1/2 after the physicality check.
double checked_nu(double nu) {
  if (!(nu >= 0.5 - kSpectrumTol)) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "symplectic eigenvalue " << nu << " < 1/2: spectrum is unphysical";
    throw DomainError(msg.str());
  }
  return std::max(nu, 0.5);
}

// (nu + 1/2)^q - (nu - 1/2)^q
double thermal_factor(double nu, double q) {
  return std::pow(nu + 0.5, q) - std::pow(nu - 0.5, q);
}

// ln[(nu + 1/2)^q - (nu - 1/2)^q]
double log_thermal_factor(double nu, double q) {
  const double ratio = (nu - 0.5) / (nu + 0.5);
  return q * std::log(nu + 0.5) + std::log1p(-std::pow(ratio, q));
}

double log_factor_product(const SymplecticSpectrum& s, double q) {
  double acc = 0.0;
  for (double nu : s.values()) acc += log_thermal_factor(checked_nu(nu), q);
  return acc;
}

double g_entropy(double nu) {
  nu = checked_nu(nu);
  const double up = (nu + 0.5) * std::log(nu + 0.5);
  const double down = nu > 0.5 ? (nu - 0.5) * std::log(nu - 0.5) : 0.0;
  return up - down;
}

}  // namespace

QIndex QIndex::infinite() noexcept {
  return QIndex(Kind::Infinite, std::numeric_limits<double>::infinity());
}

QIndex QIndex::of(double q) {
  if (std::isinf(q) && q > 0.0) return infinite();
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream msg;
    msg << "q must be > 0, got " << q;
    throw InvalidParameter(msg.str());
  }
  if (std::abs(q - 1.0) < kVonNeumannSnap) return von_neumann();
  return QIndex(Kind::Finite, q);
}

QIndex QIndex::parse(std::string_view token) {
  if (token == "inf" || token == "infinity" || token == "Inf") return infinite();
  double q = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, q);
  if (ec != std::errc() || ptr != end) {
    throw InvalidParameter("cannot parse q value '" + std::string(token) + "'");
  }
  return of(q);
}

std::string QIndex::label() const {
  if (kind_ == Kind::Infinite) return "inf";
  if (kind_ == Kind::VonNeumann) return "1";
  std::ostringstream out;
  out.precision(12);
  out << q_;
  return out.str();
}

double tr_rho_power(const SymplecticSpectrum& spectrum, double q) {
  check_q(q);
  double prod = 1.0;
  for (double nu : spectrum.values()) prod /= thermal_factor(checked_nu(nu), q);
  return prod;
}

double log_tr_rho_power(const SymplecticSpectrum& spectrum, double q) {
  check_q(q);
  return -log_factor_product(spectrum, q);
}

double tsallis_entropy(const SymplecticSpectrum& spectrum, double q) {
  check_q(q);
  if (q == 1.0) return von_neumann_entropy(spectrum);
  return (1.0 - tr_rho_power(spectrum, q)) / (q - 1.0);
}

double von_neumann_entropy(const SymplecticSpectrum& spectrum) {
  double s = 0.0;
  for (double nu : spectrum.values()) s += g_entropy(nu);
  return s;
}

ConditionalEntropyResult conditional_q_entropy(const SymplecticSpectrum& global,
                                               const SymplecticSpectrum& local, QIndex q) {
  switch (q.kind()) {
    case QIndex::Kind::VonNeumann: {
      const double v = von_neumann_entropy(global) - von_neumann_entropy(local);
      return {q, v, kNaN, v < -kEntangledTol};
    }
    case QIndex::Kind::Infinite: {
      double log_ratio = 0.0;
      for (double nu : global.values()) log_ratio += std::log(checked_nu(nu) + 0.5);
      for (double nu : local.values()) log_ratio -= std::log(checked_nu(nu) + 0.5);
      const double w = std::expm1(log_ratio);
      return {q, kNaN, w, w < -kEntangledTol};
    }
    case QIndex::Kind::Finite:
      break;
  }
  const double qv = q.value();
  double ratio;  // Tr rho_AB^q / Tr rho_A^q
  if (qv > kLogSpaceAboveQ) {
    ratio = std::exp(log_factor_product(local, qv) - log_factor_product(global, qv));
  } else {
    ratio = tr_rho_power(global, qv) / tr_rho_power(local, qv);
  }
  const double v = (1.0 - ratio) / (qv - 1.0);
  return {q, v, kNaN, v < -kEntangledTol};
}

double squeezed_thermal_sq_closed_form(double r, double T, double q) {
  check_q(q);
  if (q == 1.0) throw DomainError("closed form is undefined at q = 1");
  validate(SqueezedThermalParams{r, T});
  const double c = thermal_coth(T);
  const double cc = c * std::cosh(r);
  const double local = std::pow(cc + 1.0, q) - std::pow(cc - 1.0, q);
  const double global = std::pow(c + 1.0, q) - std::pow(c - 1.0, q);
  return (1.0 - std::pow(2.0, q) * local / (global * global)) / (q - 1.0);
}

}  // namespace gsep
