#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hgnoise/hypergraph.hpp"
#include "hgnoise/linalg.hpp"

namespace hgnoise {

/// Normalized pure state. Construction checks sum |a_i|^2 = 1 within 1e-12.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

struct DensityDiagnostics {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  /// Only filled when requested; NaN otherwise.
  double min_eigenvalue;
};

/// Checks Hermiticity, unit trace and (optionally, O(N^3)) positivity.
DensityDiagnostics diagnose(const Matrix& rho, bool with_spectrum);

/// Hermitian, unit-trace operator. The constructor checks both within 1e-12;
/// debug builds additionally check the spectrum against -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  std::size_t dim() const { return entries_.dim(); }
  const Matrix& matrix() const { return entries_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

class DensityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// amplitude_i = (-1)^g(i) / sqrt(N)
StateVector hypergraph_state(const Hypergraph& h);

/// |psi><psi|
DensityMatrix density_of(const StateVector& psi);

/// sum_{i != j} |rho_ij|
double l1_coherence(const Matrix& rho);
inline double l1_coherence(const DensityMatrix& rho) { return l1_coherence(rho.matrix()); }

/// <G|rho|G>. Throws DimensionError on a size mismatch and DensityError if the
/// overlap has an imaginary part of magnitude >= 1e-12.
double fidelity_pure(const StateVector& reference, const DensityMatrix& rho);

}  // namespace hgnoise
