#pragma once

// Weyl operators U_{r,s} = sum_i w^{ir} |i><i+s|, w = exp(2 pi i / N), with
// index addition mod N. The analytic paths below never build U_{r,s}; they use
// the index-shift forms of its action on states and density matrices.

#include <cstddef>
#include <vector>

#include "hgnoise/hypergraph.hpp"
#include "hgnoise/linalg.hpp"
#include "hgnoise/qudit_state.hpp"

namespace hgnoise {

struct WeylIndex {
  std::size_t r = 0;
  std::size_t s = 0;

  /// Throws std::out_of_range unless r, s < dim.
  static WeylIndex checked(std::size_t dim, std::size_t r, std::size_t s);

  bool is_identity() const { return r == 0 && s == 0; }
  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

/// w_N^k for every k < N, each evaluated from its own reduced exponent.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::size_t dim);

  std::size_t dim() const { return roots_.size(); }
  /// w_N^(k mod N)
  const Complex& operator()(std::size_t k) const { return roots_[k % roots_.size()]; }

 private:
  std::vector<Complex> roots_;
};

/// exp(2 pi i (k mod N) / N)
Complex root_of_unity(std::size_t dim, std::size_t k);

/// Dense U_{r,s}: entry [i][(i + s) mod N] = w^{ir}.
Matrix weyl_operator(std::size_t dim, WeylIndex idx);

/// U_{r,s}|G>, amplitude_i = (-1)^g(i+s) w^{ir} / sqrt(N).
StateVector apply_weyl_state(const Hypergraph& h, WeylIndex idx);

/// U rho U^dagger, entry (i,j) = w^{(i-j)r} rho_{i+s, j+s}. Any density matrix.
DensityMatrix conjugate_by_weyl(const DensityMatrix& rho, WeylIndex idx);

/// <G|U_{r,s}|G> = (1/N) sum_i (-1)^{g(i+s)+g(i)} w^{ir}
Complex overlap_weyl(const Hypergraph& h, WeylIndex idx);

/// overlap_weyl with precomputed signs and roots, for loops over many (r, s).
Complex overlap_weyl(const std::vector<int>& signs, const RootsOfUnity& roots, WeylIndex idx);

}  // namespace hgnoise
