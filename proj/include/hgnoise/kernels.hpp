#pragma once

// Complex double inner-loop kernels with a portable scalar reference and an
// AVX2/FMA variant picked once at runtime. All callers go through
// kernels::active(); tests may pin a backend to compare the two.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace hgnoise::kernels {

using Complex = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  // y += alpha * x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // sum_i a_i * b_i
  Complex (*dotu)(const Complex* a, const Complex* b, std::size_t n);
  // sum_i conj(a_i) * b_i
  Complex (*dotc)(const Complex* a, const Complex* b, std::size_t n);
  // sum_i |a_i|
  double (*abs_sum)(const Complex* a, std::size_t n);
};

const KernelTable& scalar_table();

/// Null when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// The table every library routine dispatches through.
const KernelTable& active();

/// Pin a backend. Returns false (and changes nothing) if it is unavailable.
bool select(Backend backend);

std::string_view backend_name(Backend backend);

// span conveniences over the active table

inline void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline Complex dotu(std::span<const Complex> a, std::span<const Complex> b) {
  return active().dotu(a.data(), b.data(), a.size());
}

inline Complex dotc(std::span<const Complex> a, std::span<const Complex> b) {
  return active().dotc(a.data(), b.data(), a.size());
}

inline double abs_sum(std::span<const Complex> a) {
  return active().abs_sum(a.data(), a.size());
}

}  // namespace hgnoise::kernels
