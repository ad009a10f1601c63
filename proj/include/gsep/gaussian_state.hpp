#pragma once

#include <cstddef>
#include <vector>

#include "gsep/linalg.hpp"
#include "gsep/symplectic.hpp"

namespace gsep {

/// Second-moment matrix of an n-mode Gaussian state in xp-interleaved
/// ordering, vacuum variance 1/2. First moments never enter any quantity
/// computed here, so they are not modeled.
///
/// Construction only enforces shape and symmetry; positivity and the
/// uncertainty bound are checked by validate_state().
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(SymMatrix mat);
  explicit CovarianceMatrix(const Matrix& mat) : CovarianceMatrix(SymMatrix(mat)) {}

  std::size_t n_modes() const noexcept { return mat_.dim() / 2; }
  const SymMatrix& matrix() const noexcept { return mat_; }
  double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

  friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

 private:
  SymMatrix mat_;
};

/// A|B split of the modes: disjoint, both nonempty, covering 0..n-1.
class ModePartition {
 public:
  ModePartition(std::vector<std::size_t> modes_a, std::vector<std::size_t> modes_b);

  /// A = given modes, B = the rest.
  static ModePartition with_a(std::size_t n_modes, std::vector<std::size_t> modes_a);
  /// A = {0}, B = {1}.
  static ModePartition two_mode() { return ModePartition({0}, {1}); }

  const std::vector<std::size_t>& a() const noexcept { return a_; }
  const std::vector<std::size_t>& b() const noexcept { return b_; }
  std::size_t n_modes() const noexcept { return a_.size() + b_.size(); }
  ModePartition swapped() const { return ModePartition(b_, a_); }

  friend bool operator==(const ModePartition&, const ModePartition&) = default;

 private:
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
};

struct PhysicalityVerdict {
  double min_nu;  // NaN when the matrix is not positive definite
  bool positive_definite;
  bool physical;
};

inline constexpr double kPhysicalTol = 1e-9;

PhysicalityVerdict validate_state(const CovarianceMatrix& v);

/// Throws UnphysicalState carrying the min-nu diagnostic unless v is physical.
void require_physical(const CovarianceMatrix& v);

/// Marginal on the modes in `keep` (any order, no duplicates): the principal
/// submatrix on rows/columns 2k, 2k+1.
CovarianceMatrix reduce(const CovarianceMatrix& v, const std::vector<std::size_t>& keep);

/// Lambda V Lambda with Lambda flipping the momentum of each transposed mode.
CovarianceMatrix partial_transpose(const CovarianceMatrix& v,
                                   const std::vector<std::size_t>& transposed_modes);

}  // namespace gsep
