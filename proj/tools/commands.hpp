#pragma once

// Subcommands of the hgnoise CLI. Each returns a process exit code and writes
// only to the streams (or --out file) it is given, so tests drive them directly.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgnoise/channels.hpp"

namespace hgnoise::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kIoError = 3,
  kVerificationFailed = 4,
};

/// Largest N for which sweep computes the dense oracle columns.
inline constexpr std::size_t kSweepOracleMaxDimension = 64;

inline constexpr const char* kSweepHeader = "param,analytic_fidelity,oracle_fidelity,analytic_coherence,oracle_coherence";

struct SweepSpec {
  std::string hypergraph_path;
  ChannelTag channel = ChannelTag::phase_flip;
  std::string param;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 2;
  std::map<std::string, double> fixed;
  bool fidelity = true;
  bool coherence = true;
  bool oracle = true;
  std::string out = "-";
};

struct VerifyOptions {
  std::vector<ChannelTag> channels;           // empty: all
  std::vector<std::string> hypergraph_paths;  // empty: built-in set
  std::string out = "verification_report.csv";
};

struct EmbedOptions {
  std::string hypergraph_path;
  unsigned site = 0;
  double p = 0.0;
};

/// Parameter names each channel accepts, in model field order.
std::vector<std::string> parameter_names(ChannelTag tag);

/// Builds a model from named parameters, filling unnamed ones with defaults
/// (p=0, g=1, gamma=0.01, t=0, eta=0.5, omega=40, alpha=0.5). Throws
/// ParameterError on a name the channel does not take.
ChannelModel make_model(ChannelTag tag, const std::map<std::string, double>& params);

/// Grid point k of steps points on [from, to]; the last is exactly `to`.
double grid_point(double from, double to, std::size_t steps, std::size_t k);

int cmd_state(const std::string& hypergraph_path, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_embed(const EmbedOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hgnoise::cli
