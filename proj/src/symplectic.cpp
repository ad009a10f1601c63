#include "gsep/symplectic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "extended.hpp"
#include "gsep/errors.hpp"
#include "gsep/gaussian_state.hpp"

namespace gsep {

namespace {

constexpr double kPairingRelTol = 1e-8;
constexpr double kDiscriminantTol = 1e-12;

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

Wide det2(Wide a, Wide b, Wide c, Wide d) { return a * d - b * c; }

Wide det3(Wide a, Wide b, Wide c, Wide d, Wide e, Wide f, Wide g, Wide h, Wide i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

Wide det4(const std::array<std::array<Wide, 4>, 4>& m) {
  Wide det = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    std::array<Wide, 9> minor{};
    std::size_t k = 0;
    for (std::size_t i = 1; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (j != c) minor[k++] = m[i][j];
    const Wide cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5], minor[6],
                          minor[7], minor[8]);
    det += (c % 2 == 0 ? m[0][c] : -m[0][c]) * cof;
  }
  return det;
}

}  // namespace

Matrix symplectic_form(std::size_t n_modes) {
  Matrix omega(2 * n_modes, 2 * n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

SymplecticSpectrum::SymplecticSpectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("empty symplectic spectrum");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

SymplecticSpectrum symplectic_spectrum(const SymMatrix& v) {
  const std::size_t n = v.dim() / 2;
  const detail::Square w = detail::pd_sqrt(detail::widen(v.matrix()));
  const detail::Square a = w * detail::widen(symplectic_form(n)) * w;
  const auto eig = detail::jacobi(detail::symmetrized(a * detail::transpose(a)));

  std::vector<double> nu(n);
  for (std::size_t k = 0; k < n; ++k) {
    const detail::Real hi = eig.values[2 * k];
    const detail::Real lo = eig.values[2 * k + 1];
    if (std::abs(hi - lo) > kPairingRelTol * std::max(std::abs(hi), std::abs(lo))) {
      throw PairingFailure("eigenvalues of -A^2 are not doubly degenerate: " +
                           std::to_string(static_cast<double>(hi)) + " vs " +
                           std::to_string(static_cast<double>(lo)));
    }
    nu[k] = static_cast<double>(std::sqrt(std::max(detail::Real{0}, (hi + lo) / 2)));
  }
  return SymplecticSpectrum(std::move(nu));
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v) {
  return symplectic_spectrum(v.matrix());
}

SymplecticSpectrum two_mode_spectrum_closed_form(const SymMatrix& v) {
  if (v.dim() != 4) throw DimensionError("two-mode closed form needs a 4x4 matrix");
  // Delta^2 - 4 det V cancels to O(eps) when nu_+ ~ nu_-, and its square root
  // would carry that as O(sqrt(eps)). Evaluated in wide precision the
  // discriminant is accurate to O(eps^2) and the roots keep full precision.
  std::array<std::array<Wide, 4>, 4> m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = static_cast<Wide>(v(i, j));

  const Wide det_v = det4(m);
  const Wide delta = det2(m[0][0], m[0][1], m[1][0], m[1][1]) + det2(m[2][2], m[2][3], m[3][2], m[3][3]) +
                     2 * det2(m[0][2], m[0][3], m[1][2], m[1][3]);
  const double disc = static_cast<double>(delta * delta - 4 * det_v);
  if (disc < -kDiscriminantTol) {
    throw NegativeDiscriminant("two-mode invariant discriminant is negative: " + std::to_string(disc));
  }
  const double nu_plus_sq = 0.5 * (static_cast<double>(delta) + std::sqrt(std::max(disc, 0.0)));
  if (!(nu_plus_sq > 0.0)) throw NotPositiveDefinite("two-mode invariants imply a non-positive spectrum");
  // det V = nu_+^2 nu_-^2; avoids cancellation in (Delta - sqrt(disc)) / 2.
  const double nu_minus_sq = static_cast<double>(det_v) / nu_plus_sq;
  return SymplecticSpectrum({std::sqrt(nu_plus_sq), std::sqrt(std::max(nu_minus_sq, 0.0))});
}

SymplecticSpectrum two_mode_spectrum_closed_form(const CovarianceMatrix& v) {
  return two_mode_spectrum_closed_form(v.matrix());
}

Matrix rotation(std::size_t n_modes, std::size_t mode, double phi) {
  Matrix s = Matrix::identity(2 * n_modes);
  const std::size_t x = 2 * mode;
  s(x, x) = std::cos(phi);
  s(x, x + 1) = std::sin(phi);
  s(x + 1, x) = -std::sin(phi);
  s(x + 1, x + 1) = std::cos(phi);
  return s;
}

Matrix single_mode_squeezer(std::size_t n_modes, std::size_t mode, double s) {
  Matrix m = Matrix::identity(2 * n_modes);
  m(2 * mode, 2 * mode) = std::exp(s);
  m(2 * mode + 1, 2 * mode + 1) = std::exp(-s);
  return m;
}

Matrix beam_splitter_50_50(std::size_t n_modes, std::size_t mode_a, std::size_t mode_b) {
  Matrix m = Matrix::identity(2 * n_modes);
  const double h = std::numbers::sqrt2 / 2.0;
  for (std::size_t quad = 0; quad < 2; ++quad) {
    const std::size_t a = 2 * mode_a + quad;
    const std::size_t b = 2 * mode_b + quad;
    m(a, a) = h;
    m(a, b) = h;
    m(b, a) = -h;
    m(b, b) = h;
  }
  return m;
}

Matrix make_test_symplectic(std::size_t n_modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 3 * n_modes + 1);
  std::uniform_int_distribution<std::size_t> pick_mode(0, n_modes - 1);
  std::uniform_int_distribution<int> pick_kind(0, n_modes > 1 ? 2 : 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-1.5, 1.5);

  Matrix s = Matrix::identity(2 * n_modes);
  const std::size_t count = length(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t mode = pick_mode(rng);
    switch (pick_kind(rng)) {
      case 0:
        s = rotation(n_modes, mode, angle(rng)) * s;
        break;
      case 1:
        s = single_mode_squeezer(n_modes, mode, squeeze(rng)) * s;
        break;
      default:
        s = beam_splitter_50_50(n_modes, mode, (mode + 1) % n_modes) * s;
        break;
    }
  }
  return s;
}

}  // namespace gsep
