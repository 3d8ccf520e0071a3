#pragma once

// Single-qubit Kraus channels acting on one vertex of an n-qubit hypergraph
// state. Qubit 0 is the leftmost tensor factor, matching the hypergraph bit
// convention. At N = 2 the bit flip below is the dit-flip channel.

#include <cstddef>
#include <span>
#include <vector>

#include "hgnoise/channels.hpp"
#include "hgnoise/linalg.hpp"
#include "hgnoise/qudit_state.hpp"

namespace hgnoise {

struct QubitSite {
  unsigned k = 0;
};

/// {sqrt(1-p) I, sqrt(p) X}
std::vector<Matrix> bit_flip_kraus(double p);

/// I^{(x)k} (x) M (x) I^{(x)(n-k-1)} for every M in ops, built entry by entry
/// from bit masks. Throws DimensionError for n outside [1, 12] or non-2x2
/// input, std::out_of_range for k >= n and CompletenessError when the input
/// set is not complete within 1e-12.
KrausSet embed_single_qubit_kraus(std::span<const Matrix> ops, QubitSite site, unsigned n);

/// (I (x) .. M .. (x) I)|psi> in O(N).
std::vector<Complex> apply_on_site(const Matrix& op, QubitSite site, std::span<const Complex> psi);

}  // namespace hgnoise
