#pragma once

#include <string>
#include <string_view>

#include "gsep/symplectic.hpp"

namespace gsep {

/// Entropic index q. Finite values within 1e-6 of 1 collapse to the von
/// Neumann limit; q -> infinity is its own case, evaluated via a finite
/// witness rather than a divergent value.
class QIndex {
 public:
  enum class Kind { Finite, VonNeumann, Infinite };

  static QIndex von_neumann() noexcept { return QIndex(Kind::VonNeumann, 1.0); }
  static QIndex infinite() noexcept;
  /// Throws InvalidParameter unless q > 0. q = +inf maps to infinite().
  static QIndex of(double q);
  /// "inf" / "infinity" or a decimal number.
  static QIndex parse(std::string_view token);

  Kind kind() const noexcept { return kind_; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  /// q itself; 1 for von Neumann, +inf for the infinite limit.
  double value() const noexcept { return q_; }
  std::string label() const;

  friend bool operator==(const QIndex&, const QIndex&) = default;

 private:
  QIndex(Kind kind, double q) noexcept : kind_(kind), q_(q) {}
  Kind kind_;
  double q_;
};

inline constexpr double kEntangledTol = 1e-12;

struct ConditionalEntropyResult {
  QIndex q;
  /// S_q(B|A) for finite q and the von Neumann case; NaN for q = inf.
  double value;
  /// W_inf for q = inf; NaN otherwise.
  double witness;
  bool entangled;

  /// Whichever of value / witness is defined.
  double criterion() const noexcept { return q.is_infinite() ? witness : value; }
};

/// Tr[rho^q] = prod_k 1 / ((nu_k + 1/2)^q - (nu_k - 1/2)^q).
/// Throws DomainError if some nu_k < 1/2 - 1e-9 or q <= 0.
double tr_rho_power(const SymplecticSpectrum& spectrum, double q);

/// ln Tr[rho^q], stable for large q and large nu.
double log_tr_rho_power(const SymplecticSpectrum& spectrum, double q);

/// (1 - Tr rho^q) / (q - 1).
double tsallis_entropy(const SymplecticSpectrum& spectrum, double q);

/// sum_k g(nu_k), g(nu) = (nu + 1/2) ln(nu + 1/2) - (nu - 1/2) ln(nu - 1/2), g(1/2) = 0.
double von_neumann_entropy(const SymplecticSpectrum& spectrum);

/// Conditional q-entropy S_q(B|A) = (1 - Tr rho_AB^q / Tr rho_A^q) / (q - 1),
/// negative only for entangled states. `local` is the spectrum of the
/// marginal on A.
///
/// q -> 1 gives S(AB) - S(A). For q = inf the returned witness is
///   W_inf = prod_AB (nu + 1/2) / prod_A (nu + 1/2) - 1,
/// which has the sign of S_q for large q. Above q = 50 the ratio of traces is
/// evaluated in log space.
ConditionalEntropyResult conditional_q_entropy(const SymplecticSpectrum& global,
                                               const SymplecticSpectrum& local, QIndex q);

/// S_q(B|A) of the two-mode squeezed thermal state straight from (r, T, q),
/// with c = coth(beta/2):
///   (1 - 2^q [(c cosh r + 1)^q - (c cosh r - 1)^q] / [(c + 1)^q - (c - 1)^q]^2) / (q - 1).
/// Requires q > 0, q != 1.
double squeezed_thermal_sq_closed_form(double r, double T, double q);

}  // namespace gsep
