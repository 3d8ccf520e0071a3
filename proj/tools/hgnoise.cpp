#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hgnoise/csv.hpp"
#include "hgnoise/kernels.hpp"

namespace {

using hgnoise::ChannelTag;

ChannelTag channel_from(const std::string& name) {
  if (auto tag = hgnoise::parse_tag(name)) return *tag;
  throw CLI::ValidationError("--channel", "unknown channel '" + name + "'");
}

std::map<std::string, double> fixed_from(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--fixed", "expected NAME=VAL, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = hgnoise::parse_number(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--fixed", e.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit hypergraph states under noisy channels: states, sweeps, oracle verification"};
  app.require_subcommand(1);

  std::string backend = "auto";
  app.add_option("--kernels", backend, "Inner-loop kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string state_path;
  auto* state = app.add_subcommand("state", "Print n, N, the sign vector and the l1 coherence");
  state->add_option("--hypergraph", state_path, "Hypergraph file")->required();

  hgnoise::cli::SweepSpec sweep_spec;
  std::string sweep_channel;
  std::vector<std::string> sweep_fixed;
  std::string sweep_metrics = "fidelity,coherence";
  bool no_oracle = false;
  auto* sweep = app.add_subcommand("sweep", "CSV of analytic and oracle fidelity/coherence along one parameter");
  sweep->add_option("--hypergraph", sweep_spec.hypergraph_path, "Hypergraph file")->required();
  sweep->add_option("--channel", sweep_channel, "Channel tag")->required();
  sweep->add_option("--param", sweep_spec.param, "Swept parameter name")->required();
  sweep->add_option("--from", sweep_spec.from, "First grid value")->required();
  sweep->add_option("--to", sweep_spec.to, "Last grid value")->required();
  sweep->add_option("--steps", sweep_spec.steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--fixed", sweep_fixed, "Fixed parameter NAME=VAL (repeatable)");
  sweep->add_option("--metrics", sweep_metrics, "Comma-separated subset of fidelity,coherence");
  sweep->add_flag("--no-oracle", no_oracle, "Skip the dense Kraus oracle columns");
  sweep->add_option("--out", sweep_spec.out, "Output CSV path, '-' for stdout");

  hgnoise::cli::VerifyOptions verify_options;
  std::vector<std::string> verify_channels;
  auto* verify = app.add_subcommand("verify", "Run the analytic-vs-oracle grid and write the report CSV");
  verify->add_option("--channel", verify_channels, "Restrict to a channel tag (repeatable)");
  verify->add_option("--hypergraph", verify_options.hypergraph_paths, "Hypergraph file (repeatable)");
  verify->add_option("--out", verify_options.out, "Report CSV path, '-' for stdout");

  hgnoise::cli::EmbedOptions embed_options;
  auto* embed = app.add_subcommand("embed", "Single-qubit bit flip on one vertex; print state diagnostics");
  embed->add_option("--hypergraph", embed_options.hypergraph_path, "Hypergraph file")->required();
  embed->add_option("--site", embed_options.site, "Target qubit index")->required();
  embed->add_option("--p", embed_options.p, "Flip probability")->required();

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) {
      sweep_spec.channel = channel_from(sweep_channel);
      sweep_spec.fixed = fixed_from(sweep_fixed);
      sweep_spec.fidelity = sweep_spec.coherence = false;
      for (const auto& metric : hgnoise::split(sweep_metrics, ',')) {
        if (metric == "fidelity") {
          sweep_spec.fidelity = true;
        } else if (metric == "coherence") {
          sweep_spec.coherence = true;
        } else {
          throw CLI::ValidationError("--metrics", "unknown metric '" + std::string(metric) + "'");
        }
      }
      sweep_spec.oracle = !no_oracle;
    }
    for (const auto& name : verify_channels) verify_options.channels.push_back(channel_from(name));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hgnoise::cli::kInputError;
  }

  if (backend != "auto") {
    const auto wanted = backend == "avx2" ? hgnoise::kernels::Backend::avx2 : hgnoise::kernels::Backend::scalar;
    if (!hgnoise::kernels::select(wanted)) {
      std::cerr << "error: kernel backend '" << backend << "' is not available on this machine\n";
      return hgnoise::cli::kInputError;
    }
  }

  if (state->parsed()) return hgnoise::cli::cmd_state(state_path, std::cout, std::cerr);
  if (sweep->parsed()) return hgnoise::cli::cmd_sweep(sweep_spec, std::cout, std::cerr);
  if (verify->parsed()) return hgnoise::cli::cmd_verify(verify_options, std::cout, std::cerr);
  return hgnoise::cli::cmd_embed(embed_options, std::cout, std::cerr);
}
