#include "hgnoise/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hgnoise {

WeylIndex WeylIndex::checked(std::size_t dim, std::size_t r, std::size_t s) {
  if (r >= dim || s >= dim) {
    throw std::out_of_range("Weyl index (" + std::to_string(r) + "," + std::to_string(s) +
                            ") out of range for N = " + std::to_string(dim));
  }
  return {r, s};
}

Complex root_of_unity(std::size_t dim, std::size_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % dim) / static_cast<double>(dim);
  return std::polar(1.0, angle);
}

RootsOfUnity::RootsOfUnity(std::size_t dim) : roots_(dim) {
  for (std::size_t k = 0; k < dim; ++k) roots_[k] = root_of_unity(dim, k);
}

Matrix weyl_operator(std::size_t dim, WeylIndex idx) {
  idx = WeylIndex::checked(dim, idx.r, idx.s);
  Matrix u(dim);
  for (std::size_t i = 0; i < dim; ++i) u(i, (i + idx.s) % dim) = root_of_unity(dim, i * idx.r);
  return u;
}

StateVector apply_weyl_state(const Hypergraph& h, WeylIndex idx) {
  const std::size_t n = h.dimension();
  idx = WeylIndex::checked(n, idx.r, idx.s);
  const RootsOfUnity roots(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sign = boolean_g(h, (i + idx.s) % n) ? -amp : amp;
    out[i] = sign * roots(i * idx.r);
  }
  return StateVector(std::move(out));
}

DensityMatrix conjugate_by_weyl(const DensityMatrix& rho, WeylIndex idx) {
  const std::size_t n = rho.dim();
  idx = WeylIndex::checked(n, idx.r, idx.s);
  const RootsOfUnity roots(n);
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t is = (i + idx.s) % n;
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = roots(((i + n - j) % n) * idx.r) * rho(is, (j + idx.s) % n);
    }
  }
  return DensityMatrix(std::move(out));
}

Complex overlap_weyl(const std::vector<int>& signs, const RootsOfUnity& roots, WeylIndex idx) {
  const std::size_t n = signs.size();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int sign = signs[(i + idx.s) % n] * signs[i];
    const Complex& w = roots(i * idx.r);
    sum += sign > 0 ? w : -w;
  }
  return sum / static_cast<double>(n);
}

Complex overlap_weyl(const Hypergraph& h, WeylIndex idx) {
  const std::size_t n = h.dimension();
  idx = WeylIndex::checked(n, idx.r, idx.s);
  return overlap_weyl(sign_vector(h), RootsOfUnity(n), idx);
}

}  // namespace hgnoise
