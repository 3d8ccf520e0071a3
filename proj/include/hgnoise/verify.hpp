#pragma once

// Analytic-vs-oracle harness. For every (hypergraph, channel point) it
// evaluates the closed forms and the brute-force route
//   fidelity_pure(G, apply_channel(|G><G|, kraus_set(model)))
//   l1_coherence(apply_channel(...))
// and records both, pass or fail.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgnoise/channels.hpp"
#include "hgnoise/hypergraph.hpp"

namespace hgnoise {

struct NamedHypergraph {
  std::string id;
  Hypergraph graph;
};

struct ModelGrid {
  std::vector<ChannelModel> points;
};

/// Seed of the random member of default_hypergraphs().
inline constexpr unsigned kDefaultRandomSeed = 42;

/// The hypergraph behind the four-qubit worked example:
/// edges {0,3}, {1,2}, {0,2,3}, {1,2,3}.
Hypergraph worked_example_hypergraph();

/// Hypergraph on n vertices with each nonempty vertex subset kept on one
/// mt19937 bit. Identical on every platform for a given seed.
Hypergraph seeded_random_hypergraph(unsigned n, unsigned seed);

/// edgeless (n=2), single edge (n=2), the worked example (n=4) and a seeded
/// random hypergraph (n=3).
std::vector<NamedHypergraph> default_hypergraphs();

/// Default parameter grid for one channel family.
ModelGrid default_grid(ChannelTag tag);
/// Concatenation of default_grid over the given tags (all seven when empty).
ModelGrid default_grid(std::span<const ChannelTag> tags = {});

struct ReportRow {
  ChannelTag channel;
  std::string hypergraph_id;
  std::string parameters;
  double analytic_fidelity;
  double oracle_fidelity;
  double fidelity_delta;
  double analytic_coherence;
  double oracle_coherence;
  double coherence_delta;
  bool pass;
};

struct VerificationReport {
  std::vector<ReportRow> rows;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Both deltas must be below this for a row to pass.
inline constexpr double kVerificationTolerance = 1e-10;

/// Rows ordered hypergraph-major, then grid order. Throws ParameterError if
/// any grid point is invalid for any hypergraph's dimension; comparison
/// failures are reported as rows, never thrown.
VerificationReport run_verification(std::span<const NamedHypergraph> hypergraphs, const ModelGrid& grid);

inline constexpr const char* kReportHeader =
    "channel,hypergraph,parameters,analytic_fidelity,oracle_fidelity,fidelity_delta,"
    "analytic_coherence,oracle_coherence,coherence_delta,pass";

/// Header row then one line per row, numbers at 12 significant digits.
void write_report_csv(std::ostream& out, const VerificationReport& report);

}  // namespace hgnoise
