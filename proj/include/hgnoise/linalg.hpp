#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgnoise {

using Complex = std::complex<double>;

/// Equality-style checks (normalization, Hermiticity, trace, completeness).
inline constexpr double kExactTolerance = 1e-12;
/// Spectrally amplified checks (PSD, rank) and analytic-vs-oracle comparisons.
inline constexpr double kSpectralTolerance = 1e-10;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Complex> row_major);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<Complex> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  Matrix adjoint() const;
  Complex trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex scale, Matrix m);

/// a * b. Zero entries of `a` are skipped, so sparse-structured left factors
/// (Weyl operators, damping operators) cost O(nnz(a) * dim).
Matrix multiply(const Matrix& a, const Matrix& b);

/// a^dagger * a, skipping zero entries of `a`.
Matrix gram(const Matrix& a);

std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> x);

/// max_i sum_j |m_ij|
double induced_inf_norm(const Matrix& m);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part of `m`. O(dim^3).
double min_hermitian_eigenvalue(const Matrix& m);

}  // namespace hgnoise
