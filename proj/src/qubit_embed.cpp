#include "hgnoise/qubit_embed.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hgnoise/hypergraph.hpp"

namespace hgnoise {
namespace {

std::size_t site_bit(QubitSite site, unsigned n) {
  if (site.k >= n) {
    throw std::out_of_range("qubit site " + std::to_string(site.k) + " out of range for n = " + std::to_string(n));
  }
  return std::size_t{1} << (n - 1 - site.k);
}

}  // namespace

std::vector<Matrix> bit_flip_kraus(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("bit flip: p outside [0, 1]");
  Matrix keep = std::sqrt(1.0 - p) * Matrix::identity(2);
  Matrix flip(2);
  flip(0, 1) = std::sqrt(p);
  flip(1, 0) = std::sqrt(p);
  return {std::move(keep), std::move(flip)};
}

KrausSet embed_single_qubit_kraus(std::span<const Matrix> ops, QubitSite site, unsigned n) {
  if (n == 0 || n > Hypergraph::kMaxVertices) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [1, " +
                         std::to_string(Hypergraph::kMaxVertices) + "]");
  }
  for (const auto& m : ops) {
    if (m.dim() != 2) throw DimensionError("single-qubit Kraus operator must be 2x2");
  }
  // completeness of the 2x2 set; throws CompletenessError
  const KrausSet local(2, std::vector<Matrix>(ops.begin(), ops.end()));

  const std::size_t bit = site_bit(site, n);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t shift = n - 1 - site.k;
  std::vector<Matrix> embedded;
  embedded.reserve(ops.size());
  for (const auto& m : local.operators()) {
    Matrix e(dim);
    // Nonzero only where i and j agree off the site; value M[bit_k(i)][bit_k(j)].
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t rest = i & ~bit;
      const std::size_t bi = (i >> shift) & 1u;
      for (std::size_t bj = 0; bj < 2; ++bj) e(i, rest | (bj << shift)) = m(bi, bj);
    }
    embedded.push_back(std::move(e));
  }
  return KrausSet(dim, std::move(embedded));
}

std::vector<Complex> apply_on_site(const Matrix& op, QubitSite site, std::span<const Complex> psi) {
  if (op.dim() != 2) throw DimensionError("single-qubit operator must be 2x2");
  if (!std::has_single_bit(psi.size()) || psi.size() < 2) {
    throw DimensionError("state dimension " + std::to_string(psi.size()) + " is not 2^n");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(psi.size()));
  const std::size_t bit = site_bit(site, n);
  std::vector<Complex> out(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    const Complex lo = psi[i];
    const Complex hi = psi[i | bit];
    out[i] = op(0, 0) * lo + op(0, 1) * hi;
    out[i | bit] = op(1, 0) * lo + op(1, 1) * hi;
  }
  return out;
}

}  // namespace hgnoise
