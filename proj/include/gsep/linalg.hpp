#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsep {

/// Dense row-major real matrix. Only what the symplectic pipeline needs:
/// products, transposes, element access. Sizes here never exceed 64x64.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  double max_abs() const noexcept;
  double frobenius() const noexcept;
  double determinant() const;

  Matrix& operator*=(double s);
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, Matrix m);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);

/// Largest |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest |m_ij - m_ji|.
double max_asymmetry(const Matrix& m);

/// Real symmetric matrix of even, nonzero dimension. Symmetry is imposed at
/// construction by replacing M with (M + M^T) / 2, so the stored entries are
/// exactly symmetric.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : SymMatrix(Matrix(rows)) {}

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigensolver. Sweeps until the off-diagonal Frobenius norm
/// drops to 1e-14 * ||M||_F; throws NonConvergence after 100 sweeps.
EigenDecomposition sym_eigendecomposition(const SymMatrix& m);

/// Principal square root Q diag(sqrt(lambda)) Q^T. Throws NotPositiveDefinite
/// if any eigenvalue is <= 1e-12.
SymMatrix pd_sqrt(const SymMatrix& m);

}  // namespace gsep
