// Randomized invariants. Seeds are fixed so failures reproduce.

#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "hgnoise/channels.hpp"
#include "hgnoise/csv.hpp"
#include "hgnoise/qudit_state.hpp"
#include "hgnoise/weyl.hpp"
#include "oracle.hpp"

using namespace hgnoise;

namespace {

constexpr int kCases = 60;

bool is_unital(ChannelTag tag) { return tag != ChannelTag::adc; }

}  // namespace

TEST_CASE("states are normalized and fully coherent") {
  gen::Source src(1001);
  for (int c = 0; c < kCases; ++c) {
    const unsigned n = 1 + src.below(7);
    const auto h = src.hypergraph(n, src.uniform(0, 0.6));
    const auto g = hypergraph_state(h);
    double norm = 0;
    for (const auto& a : g.amplitudes()) norm += std::norm(a);
    CHECK(std::abs(norm - 1) < 1e-12);
    CHECK(max_abs_diff(g.amplitudes(), oracle::circuit_state(h)) < 1e-15);
    CHECK(std::abs(l1_coherence(density_of(g)) - (h.dimension() - 1.0)) < 1e-12);
  }
}

TEST_CASE("parse inverts format") {
  gen::Source src(1002);
  for (int c = 0; c < kCases; ++c) {
    const auto h = src.hypergraph(1 + src.below(8));
    CHECK(parse_hypergraph(format_hypergraph(h)) == h);
  }
}

TEST_CASE("channels are trace preserving and complete") {
  gen::Source src(1003);
  for (int c = 0; c < kCases; ++c) {
    const auto model = src.model();
    const unsigned n = 1 + src.below(4);
    const auto h = src.hypergraph(n);
    CAPTURE(describe_parameters(model));
    CAPTURE(n);
    const auto ks = kraus_set(model, h.dimension());
    CHECK(ks.completeness_error() < 1e-12);
    const auto out = apply_channel(density_of(hypergraph_state(h)), ks);
    CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-12);
    CHECK(hermiticity_error(out.matrix()) < 1e-12);
    CHECK(min_hermitian_eigenvalue(out.matrix()) > -1e-10);
  }
}

TEST_CASE("closed forms agree with the dense oracle") {
  gen::Source src(1004);
  for (int c = 0; c < kCases; ++c) {
    const auto model = src.model();
    const unsigned n = 1 + src.below(4);
    const auto h = src.hypergraph(n, src.uniform(0, 0.7));
    CAPTURE(describe_parameters(model));
    CAPTURE(format_hypergraph(h));
    const auto psi = oracle::circuit_state(h);
    const Matrix want = oracle::evolve(oracle::outer(psi), oracle::kraus_for(model, h.dimension()));
    CHECK(std::abs(analytic_fidelity(model, h) - oracle::fidelity(psi, want)) < 1e-10);
    CHECK(std::abs(analytic_coherence(model, h) - oracle::coherence(want)) < 1e-10);
    CHECK(max_abs_diff(analytic_evolved_state(model, h), want) < 1e-10);
  }
}

TEST_CASE("fidelity lies in [0, 1] and unital channels never add coherence") {
  gen::Source src(1005);
  for (int c = 0; c < 4 * kCases; ++c) {
    const auto tag = kAllChannels[src.below(7)];
    const auto model = src.model(tag);
    const auto h = src.hypergraph(1 + src.below(5));
    const double f = analytic_fidelity(model, h);
    CHECK(f >= -1e-12);
    CHECK(f <= 1 + 1e-12);
    const double coherence = analytic_coherence(model, h);
    CHECK(coherence >= 0);
    if (is_unital(tag)) CHECK(coherence <= h.dimension() - 1.0 + 1e-10);
  }
}

TEST_CASE("phase flip fidelity ignores the hypergraph") {
  gen::Source src(1006);
  for (int c = 0; c < kCases; ++c) {
    const double p = src.uniform(0, 1);
    const unsigned n = 1 + src.below(5);
    const double f0 = analytic_fidelity(PhaseFlip{p}, src.hypergraph(n));
    CHECK(f0 == 1 - p);
    CHECK(analytic_fidelity(PhaseFlip{p}, src.hypergraph(n)) == f0);
  }
}

TEST_CASE("weyl conjugation is unitary") {
  gen::Source src(1007);
  for (int c = 0; c < kCases; ++c) {
    const auto h = src.hypergraph(1 + src.below(4));
    const std::size_t dim = h.dimension();
    const WeylIndex idx{src.below(static_cast<unsigned>(dim)), src.below(static_cast<unsigned>(dim))};
    const auto rho = density_of(hypergraph_state(h));
    const auto moved = conjugate_by_weyl(rho, idx);
    CHECK(std::abs(moved.matrix().trace() - 1.0) < 1e-12);
    CHECK(std::abs(l1_coherence(moved) - l1_coherence(rho)) < 1e-10);
    CHECK(std::abs(std::norm(overlap_weyl(h, idx)) - fidelity_pure(hypergraph_state(h), moved)) < 1e-12);
  }
}

TEST_CASE("adc lambda stays in [0, 1]") {
  gen::Source src(1008);
  for (int c = 0; c < 20 * kCases; ++c) {
    const double g = src.uniform(0.01, 5), gamma = src.uniform(0, 50), t = src.uniform(0, 100);
    const double lambda = lambda_adc(g, gamma, t);
    CHECK(lambda >= 0);
    CHECK(lambda <= 1);
  }
}

TEST_CASE("number formatting round-trips at full precision") {
  gen::Source src(1009);
  for (int c = 0; c < 20 * kCases; ++c) {
    const double x = std::ldexp(src.uniform(-1, 1), static_cast<int>(src.below(80)) - 40);
    CHECK(parse_number(format_number(x, 17)) == x);
  }
}
