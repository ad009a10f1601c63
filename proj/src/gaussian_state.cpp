#include "gsep/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gsep/errors.hpp"

namespace gsep {

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw IndexError(std::string(what) + ": duplicate mode index");
  }
  return v;
}

// Sorted, duplicate-free, in-range copy of a mode list.
std::vector<std::size_t> checked_modes(std::vector<std::size_t> modes, std::size_t n_modes,
                                       const char* what) {
  if (modes.empty()) throw IndexError(std::string(what) + ": mode list is empty");
  modes = sorted_unique(std::move(modes), what);
  if (modes.back() >= n_modes) {
    throw IndexError(std::string(what) + ": mode " + std::to_string(modes.back()) +
                     " out of range for " + std::to_string(n_modes) + " modes");
  }
  return modes;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(SymMatrix mat) : mat_(std::move(mat)) {}

ModePartition::ModePartition(std::vector<std::size_t> modes_a, std::vector<std::size_t> modes_b)
    : a_(sorted_unique(std::move(modes_a), "partition A")),
      b_(sorted_unique(std::move(modes_b), "partition B")) {
  if (a_.empty() || b_.empty()) throw IndexError("partition sides must both be nonempty");
  std::vector<std::size_t> all(a_);
  all.insert(all.end(), b_.begin(), b_.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) throw IndexError("partition must split modes 0..n-1 into disjoint sides");
  }
}

ModePartition ModePartition::with_a(std::size_t n_modes, std::vector<std::size_t> modes_a) {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n_modes; ++k)
    if (std::find(modes_a.begin(), modes_a.end(), k) == modes_a.end()) rest.push_back(k);
  return ModePartition(std::move(modes_a), std::move(rest));
}

PhysicalityVerdict validate_state(const CovarianceMatrix& v) {
  try {
    const double min_nu = symplectic_spectrum(v).min();
    return {min_nu, true, min_nu >= 0.5 - kPhysicalTol};
  } catch (const NotPositiveDefinite&) {
    return {std::numeric_limits<double>::quiet_NaN(), false, false};
  }
}

void require_physical(const CovarianceMatrix& v) {
  const auto verdict = validate_state(v);
  if (verdict.physical) return;
  std::ostringstream msg;
  msg.precision(12);
  if (!verdict.positive_definite) {
    msg << "covariance matrix is not positive definite";
  } else {
    msg << "unphysical covariance matrix: min symplectic eigenvalue " << verdict.min_nu
        << " < 1/2";
  }
  throw UnphysicalState(msg.str());
}

CovarianceMatrix reduce(const CovarianceMatrix& v, const std::vector<std::size_t>& keep) {
  const auto modes = checked_modes(keep, v.n_modes(), "reduce");
  const std::size_t d = 2 * modes.size();
  Matrix sub(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      sub(i, j) = v(2 * modes[i / 2] + i % 2, 2 * modes[j / 2] + j % 2);
  return CovarianceMatrix(sub);
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& v,
                                   const std::vector<std::size_t>& transposed_modes) {
  const auto modes = checked_modes(transposed_modes, v.n_modes(), "partial_transpose");
  const std::size_t d = 2 * v.n_modes();
  std::vector<double> sign(d, 1.0);
  for (std::size_t k : modes) sign[2 * k + 1] = -1.0;
  Matrix out = v.matrix().matrix();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) *= sign[i] * sign[j];
  return CovarianceMatrix(out);
}

}  // namespace gsep
