#pragma once

// Extended-precision kernels behind sym_eigendecomposition, pd_sqrt and the
// symplectic spectrum. Inputs and outputs are double; the intermediate
// products and rotations carry the extra bits of long double.

#include <cstddef>
#include <vector>

#include "gsep/linalg.hpp"

namespace gsep::detail {

using Real = long double;

/// Square row-major matrix of Real.
struct Square {
  std::size_t n = 0;
  std::vector<Real> a;

  explicit Square(std::size_t dim) : n(dim), a(dim * dim, Real{0}) {}
  Real& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Real operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

Square widen(const Matrix& m);
Matrix narrow(const Square& m);
Square operator*(const Square& x, const Square& y);
Square transpose(const Square& m);
/// (M + M^T) / 2.
Square symmetrized(const Square& m);

struct Eigen {
  std::vector<Real> values;  // descending
  Square vectors;            // column k pairs with values[k]
};

/// Cyclic Jacobi on a symmetric matrix; same stopping rule and sweep cap as
/// sym_eigendecomposition.
Eigen jacobi(Square m);

/// Principal square root of a symmetric positive-definite matrix.
Square pd_sqrt(const Square& m);

}  // namespace gsep::detail
