// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "hgnoise/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace hgnoise::kernels::detail {
namespace {

// std::complex<double> is laid out as {re, im}, so one __m256d holds two values.
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Lanes {0,2} and {1,3} summed separately: returns (even, odd).
inline void hsum_pairs(__m256d v, double& even, double& odd) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  even = _mm_cvtsd_f64(s);
  odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = as_doubles(x);
  double* yd = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // {im, re}
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (alpha.real() * xr - alpha.imag() * xi),
                   y[i].imag() + (alpha.real() * xi + alpha.imag() * xr));
  }
}

// Accumulates straight[k] = a[k]*b[k] and crossed[k] = a[k]*swap(b)[k] lane-wise.
inline void dot_accumulate(const Complex* a, const Complex* b, std::size_t n, double& rr, double& ii,
                           double& ri, double& ir) {
  const double* ad = as_doubles(a);
  const double* bd = as_doubles(b);
  __m256d straight = _mm256_setzero_pd();
  __m256d crossed = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ad + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    straight = _mm256_fmadd_pd(av, bv, straight);
    crossed = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0b0101), crossed);
  }
  hsum_pairs(straight, rr, ii);
  hsum_pairs(crossed, ri, ir);
  for (; i < n; ++i) {
    rr += a[i].real() * b[i].real();
    ii += a[i].imag() * b[i].imag();
    ri += a[i].real() * b[i].imag();
    ir += a[i].imag() * b[i].real();
  }
}

Complex dotu_avx2(const Complex* a, const Complex* b, std::size_t n) {
  double rr, ii, ri, ir;
  dot_accumulate(a, b, n, rr, ii, ri, ir);
  return {rr - ii, ri + ir};
}

Complex dotc_avx2(const Complex* a, const Complex* b, std::size_t n) {
  double rr, ii, ri, ir;
  dot_accumulate(a, b, n, rr, ii, ri, ir);
  return {rr + ii, ri - ir};
}

double abs_sum_avx2(const Complex* a, std::size_t n) {
  const double* ad = as_doubles(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(ad + 2 * i);
    const __m256d sq = _mm256_mul_pd(v, v);
    // {r0^2+i0^2, same, r1^2+i1^2, same}
    const __m256d norm2 = _mm256_hadd_pd(sq, sq);
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(norm2));
  }
  // each modulus was counted twice
  double sum = 0.5 * hsum(acc);
  for (; i < n; ++i) sum += std::hypot(a[i].real(), a[i].imag());
  return sum;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{Backend::avx2, axpy_avx2, dotu_avx2, dotc_avx2, abs_sum_avx2};
  return table;
}

}  // namespace hgnoise::kernels::detail
