#include "hgnoise/qudit_state.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("state vector must be non-empty");
  const double norm2 = kernels::dotc(amplitudes_, amplitudes_).real();
  if (std::abs(norm2 - 1.0) > kExactTolerance) {
    throw DensityError("state vector not normalized: squared norm " + std::to_string(norm2));
  }
}

DensityDiagnostics diagnose(const Matrix& rho, bool with_spectrum) {
  DensityDiagnostics d{};
  d.hermiticity_error = hermiticity_error(rho);
  d.trace_error = std::abs(rho.trace() - 1.0);
  d.min_eigenvalue = with_spectrum ? min_hermitian_eigenvalue(rho) : std::numeric_limits<double>::quiet_NaN();
  return d;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
#ifdef NDEBUG
  constexpr bool kCheckSpectrum = false;
#else
  constexpr bool kCheckSpectrum = true;
#endif
  const auto d = diagnose(entries_, kCheckSpectrum);
  if (d.hermiticity_error > kExactTolerance) {
    throw DensityError("density matrix not Hermitian: error " + std::to_string(d.hermiticity_error));
  }
  if (d.trace_error > kExactTolerance) {
    throw DensityError("density matrix trace differs from 1 by " + std::to_string(d.trace_error));
  }
  if (kCheckSpectrum && d.min_eigenvalue < -kSpectralTolerance) {
    throw DensityError("density matrix not positive semidefinite: eigenvalue " +
                       std::to_string(d.min_eigenvalue));
  }
}

StateVector hypergraph_state(const Hypergraph& h) {
  const std::size_t n = h.dimension();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> amplitudes(n);
  for (std::size_t i = 0; i < n; ++i) amplitudes[i] = boolean_g(h, i) ? -amp : amp;
  return StateVector(std::move(amplitudes));
}

DensityMatrix density_of(const StateVector& psi) {
  const std::size_t n = psi.dim();
  Matrix rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(rho));
}

double l1_coherence(const Matrix& rho) {
  const std::size_t n = rho.dim();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rho.row(i);
    total += kernels::abs_sum(row.first(i)) + kernels::abs_sum(row.subspan(i + 1));
  }
  return total;
}

double fidelity_pure(const StateVector& reference, const DensityMatrix& rho) {
  if (reference.dim() != rho.dim()) {
    throw DimensionError("fidelity: state has dimension " + std::to_string(reference.dim()) +
                         ", density matrix " + std::to_string(rho.dim()));
  }
  const auto rho_g = multiply(rho.matrix(), reference.amplitudes());
  const Complex overlap = kernels::dotc(reference.amplitudes(), rho_g);
  if (std::abs(overlap.imag()) >= kExactTolerance) {
    throw DensityError("fidelity has imaginary part " + std::to_string(overlap.imag()));
  }
  return overlap.real();
}

}  // namespace hgnoise
