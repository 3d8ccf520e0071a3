#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hgnoise/csv.hpp"
#include "hgnoise/hypergraph.hpp"
#include "hgnoise/qubit_embed.hpp"
#include "hgnoise/qudit_state.hpp"
#include "hgnoise/verify.hpp"

namespace hgnoise::cli {
namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read hypergraph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_hypergraph(text.str());
  } catch (const ParseError& e) {
    throw HypergraphError(path + ": " + e.what());
  }
}

// Runs body with the requested output stream: `out` for "-", a file otherwise.
template <class Body>
int with_output(const std::string& path, std::ostream& out, Body&& body) {
  if (path == "-") return body(out);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot write '" + path + "'");
  const int code = body(file);
  file.flush();
  if (!file) throw IoFailure("write to '" + path + "' failed");
  return code;
}

// Maps the error taxonomy onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

double param_or(const std::map<std::string, double>& params, const char* name, double fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> parameter_names(ChannelTag tag) {
  switch (tag) {
    case ChannelTag::adc:
      return {"g", "gamma", "t"};
    case ChannelTag::nm_dephasing:
      return {"p", "eta", "omega"};
    case ChannelTag::nm_depolarizing:
      return {"p", "alpha"};
    default:
      return {"p"};
  }
}

ChannelModel make_model(ChannelTag tag, const std::map<std::string, double>& params) {
  const auto names = parameter_names(tag);
  for (const auto& [name, value] : params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ParameterError("channel " + std::string(tag_name(tag)) + " has no parameter '" + name + "'");
    }
  }
  const double p = param_or(params, "p", 0.0);
  switch (tag) {
    case ChannelTag::dit_flip:
      return DitFlip{p};
    case ChannelTag::phase_flip:
      return PhaseFlip{p};
    case ChannelTag::dit_phase_flip:
      return DitPhaseFlip{p};
    case ChannelTag::depolarizing:
      return Depolarizing{p};
    case ChannelTag::adc:
      return AdcNonMarkovian{param_or(params, "g", 1.0), param_or(params, "gamma", 0.01), param_or(params, "t", 0.0)};
    case ChannelTag::nm_dephasing:
      return NmDephasing{p, param_or(params, "eta", 0.5), param_or(params, "omega", 40.0)};
    case ChannelTag::nm_depolarizing:
      return NmDepolarizing{p, param_or(params, "alpha", 0.5)};
  }
  throw ParameterError("unknown channel");
}

double grid_point(double from, double to, std::size_t steps, std::size_t k) {
  if (k + 1 == steps) return to;
  return from + (to - from) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

int cmd_state(const std::string& hypergraph_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Hypergraph h = load_hypergraph(hypergraph_path);
    std::string signs;
    for (int s : sign_vector(h)) signs += s > 0 ? '+' : '-';
    const double coherence = l1_coherence(density_of(hypergraph_state(h)));
    out << "n=" << h.vertex_count() << '\n'
        << "N=" << h.dimension() << '\n'
        << "signs=" << signs << '\n'
        << "l1_coherence=" << format_number(coherence) << '\n';
    return kOk;
  });
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (spec.steps < 2) throw ParameterError("sweep needs at least 2 steps");
    if (!(spec.from < spec.to)) throw ParameterError("sweep needs --from < --to");
    const auto names = parameter_names(spec.channel);
    if (std::find(names.begin(), names.end(), spec.param) == names.end()) {
      throw ParameterError("channel " + std::string(tag_name(spec.channel)) + " cannot sweep '" + spec.param + "'");
    }
    if (spec.fixed.count(spec.param)) throw ParameterError("'" + spec.param + "' is both swept and fixed");

    const Hypergraph h = load_hypergraph(spec.hypergraph_path);
    const std::size_t dim = h.dimension();
    if (spec.oracle && dim > kSweepOracleMaxDimension) {
      throw ParameterError("dense oracle limited to N <= " + std::to_string(kSweepOracleMaxDimension) +
                           "; pass --no-oracle for N = " + std::to_string(dim));
    }

    // Validate the whole grid before any output is produced.
    std::vector<std::pair<double, ChannelModel>> points;
    points.reserve(spec.steps);
    for (std::size_t k = 0; k < spec.steps; ++k) {
      auto params = spec.fixed;
      const double value = grid_point(spec.from, spec.to, spec.steps, k);
      params[spec.param] = value;
      ChannelModel model = make_model(spec.channel, params);
      validate(model, dim);
      points.emplace_back(value, std::move(model));
    }

    const StateVector g = hypergraph_state(h);
    const DensityMatrix rho = density_of(g);
    return with_output(spec.out, out, [&](std::ostream& os) {
      os << kSweepHeader << '\n';
      for (const auto& [value, model] : points) {
        std::string af, of, ac, oc;
        if (spec.fidelity) af = format_number(analytic_fidelity(model, h));
        if (spec.coherence) ac = format_number(analytic_coherence(model, h));
        if (spec.oracle && (spec.fidelity || spec.coherence)) {
          const DensityMatrix evolved = apply_channel(rho, kraus_set(model, dim));
          if (spec.fidelity) of = format_number(fidelity_pure(g, evolved));
          if (spec.coherence) oc = format_number(l1_coherence(evolved));
        }
        os << format_number(value) << ',' << af << ',' << of << ',' << ac << ',' << oc << '\n';
      }
      return int{kOk};
    });
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::vector<NamedHypergraph> graphs;
    if (options.hypergraph_paths.empty()) {
      graphs = default_hypergraphs();
    } else {
      for (const auto& path : options.hypergraph_paths) graphs.push_back({path, load_hypergraph(path)});
    }
    const auto report = run_verification(graphs, default_grid(options.channels));
    with_output(options.out, out, [&](std::ostream& os) {
      write_report_csv(os, report);
      return int{kOk};
    });
    if (options.out != "-") {
      out << "rows=" << report.rows.size() << " failures=" << report.failures() << " report=" << options.out << '\n';
    }
    return report.all_pass() ? kOk : kVerificationFailed;
  });
}

int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Hypergraph h = load_hypergraph(options.hypergraph_path);
    const QubitSite site{options.site};
    if (site.k >= h.vertex_count()) {
      throw std::out_of_range("site " + std::to_string(site.k) + " out of range for n = " +
                              std::to_string(h.vertex_count()));
    }
    const auto ops = bit_flip_kraus(options.p);
    const KrausSet ks = embed_single_qubit_kraus(ops, site, h.vertex_count());

    const StateVector g = hypergraph_state(h);
    const DensityMatrix evolved = apply_channel(density_of(g), ks);

    Matrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const auto flipped = apply_on_site(x, site, g.amplitudes());
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < g.dim(); ++i) overlap += std::conj(g[i]) * flipped[i];

    out << "site=" << site.k << '\n'
        << "p=" << format_number(options.p) << '\n'
        << "trace=" << format_number(evolved.matrix().trace().real()) << '\n'
        << "l1_coherence=" << format_number(l1_coherence(evolved)) << '\n'
        << "fidelity=" << format_number(fidelity_pure(g, evolved)) << '\n'
        << "flip_overlap_squared=" << format_number(std::norm(overlap)) << '\n';
    return kOk;
  });
}

}  // namespace hgnoise::cli
