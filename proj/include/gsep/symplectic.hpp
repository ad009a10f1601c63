#pragma once

#include <cstdint>
#include <vector>

#include "gsep/linalg.hpp"

namespace gsep {

class CovarianceMatrix;

/// Omega = (+) [[0, 1], [-1, 0]] over modes, quadratures ordered x1, p1, x2, p2, ...
Matrix symplectic_form(std::size_t n_modes);

/// The n symplectic eigenvalues of a 2n x 2n covariance matrix, sorted
/// descending. Physical states have every value >= 1/2.
class SymplecticSpectrum {
 public:
  explicit SymplecticSpectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t source_dim() const noexcept { return 2 * values_.size(); }
  double min() const noexcept { return values_.back(); }
  double max() const noexcept { return values_.front(); }

  bool is_physical(double tol = 1e-9) const noexcept { return min() >= 0.5 - tol; }

 private:
  std::vector<double> values_;
};

/// Williamson spectrum via the antisymmetric conjugate A = V^{1/2} Omega V^{1/2}:
/// the symmetric PSD matrix A A^T has eigenvalues nu_k^2, each twice.
/// Throws NotPositiveDefinite or PairingFailure.
SymplecticSpectrum symplectic_spectrum(const SymMatrix& v);
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v);

/// Two-mode shortcut from the local invariants of V = [[A, C], [C^T, B]]:
/// nu_pm^2 = (Delta +- sqrt(Delta^2 - 4 det V)) / 2, Delta = det A + det B + 2 det C.
SymplecticSpectrum two_mode_spectrum_closed_form(const SymMatrix& v);
SymplecticSpectrum two_mode_spectrum_closed_form(const CovarianceMatrix& v);

/// Seeded random element of Sp(2n, R) built from single-mode rotations,
/// single-mode squeezers (|s| <= 1.5) and 50:50 beam splitters on adjacent
/// modes. Test fixture.
Matrix make_test_symplectic(std::size_t n_modes, std::uint64_t seed);

/// Elementary symplectic blocks, embedded in 2n dimensions.
Matrix rotation(std::size_t n_modes, std::size_t mode, double phi);
Matrix single_mode_squeezer(std::size_t n_modes, std::size_t mode, double s);
Matrix beam_splitter_50_50(std::size_t n_modes, std::size_t mode_a, std::size_t mode_b);

}  // namespace gsep
