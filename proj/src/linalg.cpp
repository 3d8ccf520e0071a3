#include "hgnoise/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

Matrix::Matrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) {
    throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                         std::to_string(dim * dim));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix sum: dimension mismatch");
  kernels::axpy(1.0, other.data(), data());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix difference: dimension mismatch");
  kernels::axpy(-1.0, other.data(), data());
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex scale, Matrix m) { return m *= scale; }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      kernels::axpy(aik, b.row(k), out);
    }
  }
  return c;
}

Matrix gram(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix g(n);
  // (a^dagger a)_{jk} = sum_i conj(a_ij) a_ik
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      kernels::axpy(std::conj(aij), a.row(i), g.row(j));
    }
  }
  return g;
}

std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> x) {
  if (x.size() != a.dim()) throw DimensionError("matrix-vector product: dimension mismatch");
  std::vector<Complex> y(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) y[i] = kernels::dotu(a.row(i), x);
  return y;
}

double induced_inf_norm(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) best = std::max(best, kernels::abs_sum(m.row(i)));
  return best;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("max_abs_diff: size mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  return max_abs_diff(a.data(), b.data());
}

double hermiticity_error(const Matrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return best;
}

double min_hermitian_eigenvalue(const Matrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  if (n == 0) return 0.0;
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace hgnoise
