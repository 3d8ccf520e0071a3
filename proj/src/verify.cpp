#include "hgnoise/verify.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "hgnoise/csv.hpp"
#include "hgnoise/qudit_state.hpp"

namespace hgnoise {
namespace {

constexpr double kProbabilityGrid[] = {0.0, 0.1, 0.25, 0.5, 0.9, 1.0};
// p is capped at 1/2 for dephasing; 0.4 stands in for 0.9 and 1.
constexpr double kDephasingGrid[] = {0.0, 0.1, 0.25, 0.4, 0.5};
constexpr double kTimeGrid[] = {0.0, 0.1, 0.5, 1.0, 5.0, 10.0};
constexpr double kCouplingGrid[] = {0.01, 0.25, 10.0, 20.0};
constexpr double kAlphaGrid[] = {0.0, 0.5, 1.0};
constexpr double kDephasingStrength = 0.5;
constexpr double kDephasingFrequency = 40.0;

}  // namespace

Hypergraph worked_example_hypergraph() { return Hypergraph(4, {{0, 3}, {1, 2}, {0, 2, 3}, {1, 2, 3}}); }

Hypergraph seeded_random_hypergraph(unsigned n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    if ((rng() & 1u) == 0) continue;
    Edge e;
    for (unsigned v = 0; v < n; ++v) {
      if (subset & (1u << v)) e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

std::vector<NamedHypergraph> default_hypergraphs() {
  std::vector<NamedHypergraph> out;
  out.push_back({"edgeless_n2", Hypergraph(2, {})});
  out.push_back({"single_edge_n2", Hypergraph(2, {{0, 1}})});
  out.push_back({"worked_example_n4", worked_example_hypergraph()});
  out.push_back({"random_n3_seed" + std::to_string(kDefaultRandomSeed),
                 seeded_random_hypergraph(3, kDefaultRandomSeed)});
  return out;
}

ModelGrid default_grid(ChannelTag tag) {
  ModelGrid grid;
  auto& pts = grid.points;
  switch (tag) {
    case ChannelTag::dit_flip:
      for (double p : kProbabilityGrid) pts.emplace_back(DitFlip{p});
      break;
    case ChannelTag::phase_flip:
      for (double p : kProbabilityGrid) pts.emplace_back(PhaseFlip{p});
      break;
    case ChannelTag::dit_phase_flip:
      for (double p : kProbabilityGrid) pts.emplace_back(DitPhaseFlip{p});
      break;
    case ChannelTag::depolarizing:
      for (double p : kProbabilityGrid) pts.emplace_back(Depolarizing{p});
      break;
    case ChannelTag::adc:
      for (double gamma : kCouplingGrid) {
        for (double t : kTimeGrid) pts.emplace_back(AdcNonMarkovian{1.0, gamma, t});
      }
      break;
    case ChannelTag::nm_dephasing:
      for (double p : kDephasingGrid) pts.emplace_back(NmDephasing{p, kDephasingStrength, kDephasingFrequency});
      break;
    case ChannelTag::nm_depolarizing:
      for (double alpha : kAlphaGrid) {
        for (double p : kProbabilityGrid) pts.emplace_back(NmDepolarizing{p, alpha});
      }
      break;
  }
  return grid;
}

ModelGrid default_grid(std::span<const ChannelTag> tags) {
  if (tags.empty()) tags = kAllChannels;
  ModelGrid grid;
  for (ChannelTag tag : tags) {
    auto part = default_grid(tag);
    grid.points.insert(grid.points.end(), part.points.begin(), part.points.end());
  }
  return grid;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.pass ? 0 : 1;
  return n;
}

VerificationReport run_verification(std::span<const NamedHypergraph> hypergraphs, const ModelGrid& grid) {
  for (const auto& h : hypergraphs) {
    for (const auto& model : grid.points) validate(model, h.graph.dimension());
  }

  VerificationReport report;
  report.rows.reserve(hypergraphs.size() * grid.points.size());
  for (const auto& h : hypergraphs) {
    const StateVector g = hypergraph_state(h.graph);
    const DensityMatrix rho = density_of(g);
    for (const auto& model : grid.points) {
      ReportRow row{};
      row.channel = tag_of(model);
      row.hypergraph_id = h.id;
      row.parameters = describe_parameters(model);
      row.analytic_fidelity = analytic_fidelity(model, h.graph);
      row.analytic_coherence = analytic_coherence(model, h.graph);

      try {
        const DensityMatrix evolved = apply_channel(rho, kraus_set(model, h.graph.dimension()));
        row.oracle_fidelity = fidelity_pure(g, evolved);
        row.oracle_coherence = l1_coherence(evolved);
      } catch (const DensityError&) {
        // a broken evolved state is a failed row, not an abort
        row.oracle_fidelity = std::numeric_limits<double>::quiet_NaN();
        row.oracle_coherence = std::numeric_limits<double>::quiet_NaN();
      }

      row.fidelity_delta = std::abs(row.analytic_fidelity - row.oracle_fidelity);
      row.coherence_delta = std::abs(row.analytic_coherence - row.oracle_coherence);
      // NaN deltas fail
      row.pass = row.fidelity_delta < kVerificationTolerance && row.coherence_delta < kVerificationTolerance;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void write_report_csv(std::ostream& out, const VerificationReport& report) {
  out << kReportHeader << '\n';
  for (const auto& r : report.rows) {
    out << tag_name(r.channel) << ',' << r.hypergraph_id << ',' << r.parameters << ','
        << format_number(r.analytic_fidelity) << ',' << format_number(r.oracle_fidelity) << ','
        << format_number(r.fidelity_delta) << ',' << format_number(r.analytic_coherence) << ','
        << format_number(r.oracle_coherence) << ',' << format_number(r.coherence_delta) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace hgnoise
