#include "gsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "extended.hpp"
#include "gsep/errors.hpp"

namespace gsep {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::frobenius() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double Matrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix lu = *this;
  const std::size_t n = rows_;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(double s, Matrix m) { return m *= s; }
Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

double max_asymmetry(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("asymmetry of a non-square matrix");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - m(j, i)));
  return d;
}

SymMatrix::SymMatrix(const Matrix& m) : m_(m) {
  if (!m.is_square()) throw DimensionError("symmetric matrix must be square");
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw DimensionError("symmetric matrix dimension must be even and nonzero, got " +
                         std::to_string(m.rows()));
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      m_(i, j) = avg;
      m_(j, i) = avg;
    }
}

namespace detail {

namespace {

constexpr std::size_t kMaxEigenDim = 64;
constexpr int kMaxSweeps = 100;
constexpr Real kOffDiagRelTol = 1e-14L;

Real frobenius(const Square& m) {
  Real s = 0;
  for (Real x : m.a) s += x * x;
  return std::sqrt(s);
}

Real off_diagonal_norm(const Square& m) {
  Real s = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

// Zeroes a(p,q) by the rotation G^T A G and accumulates G into v.
void rotate(Square& a, Square& v, std::size_t p, std::size_t q) {
  const Real apq = a(p, q);
  const Real theta = (a(q, q) - a(p, p)) / (2 * apq);
  Real t;
  if (std::abs(theta) > 1e150L) {
    t = 0.5L / theta;
  } else {
    t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
    if (theta < 0) t = -t;
  }
  const Real c = 1 / std::sqrt(t * t + 1);
  const Real s = t * c;
  const std::size_t n = a.n;

  for (std::size_t k = 0; k < n; ++k) {
    const Real akp = a(k, p);
    const Real akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Real apk = a(p, k);
    const Real aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0;
  a(q, p) = 0;

  for (std::size_t k = 0; k < n; ++k) {
    const Real vkp = v(k, p);
    const Real vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

Square widen(const Matrix& m) {
  Square out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Matrix narrow(const Square& m) {
  Matrix out(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

Square operator*(const Square& x, const Square& y) {
  Square out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const Real xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

Square transpose(const Square& m) {
  Square out(m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out(j, i) = m(i, j);
  return out;
}

Square symmetrized(const Square& m) {
  Square out(m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) out(i, j) = (m(i, j) + m(j, i)) / 2;
  return out;
}

Eigen jacobi(Square a) {
  const std::size_t n = a.n;
  if (n > kMaxEigenDim) {
    throw DimensionError("eigensolver limited to dimension " + std::to_string(kMaxEigenDim));
  }
  Square v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;
  const Real target = kOffDiagRelTol * frobenius(a);

  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) {
      throw NonConvergence("Jacobi eigensolver did not converge in " +
                           std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  Eigen out{std::vector<Real>(n), Square(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Square pd_sqrt(const Square& m) {
  const auto eig = jacobi(m);
  const std::size_t n = m.n;
  for (Real lambda : eig.values) {
    if (!(lambda > 1e-12L)) {
      throw NotPositiveDefinite("matrix is not positive definite (eigenvalue " +
                                std::to_string(static_cast<double>(lambda)) + ")");
    }
  }
  Square w(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real r = std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Real qik = eig.vectors(i, k) * r;
      for (std::size_t j = 0; j < n; ++j) w(i, j) += qik * eig.vectors(j, k);
    }
  }
  return symmetrized(w);
}

}  // namespace detail

EigenDecomposition sym_eigendecomposition(const SymMatrix& m) {
  const auto eig = detail::jacobi(detail::widen(m.matrix()));
  EigenDecomposition out{std::vector<double>(eig.values.size()), detail::narrow(eig.vectors)};
  for (std::size_t k = 0; k < eig.values.size(); ++k) out.values[k] = static_cast<double>(eig.values[k]);
  return out;
}

SymMatrix pd_sqrt(const SymMatrix& m) { return SymMatrix(detail::narrow(detail::pd_sqrt(detail::widen(m.matrix())))); }

}  // namespace gsep
