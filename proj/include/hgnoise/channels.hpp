#pragma once

// The seven qudit noise channels: Kraus sets built from Weyl operators (or the
// damping operators for the amplitude-damping channel), the dense Kraus map,
// and the closed-form fidelity and l1-coherence of each channel applied to a
// hypergraph state.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "hgnoise/hypergraph.hpp"
#include "hgnoise/linalg.hpp"
#include "hgnoise/qudit_state.hpp"

namespace hgnoise {

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DitFlip {
  double p;
};
struct PhaseFlip {
  double p;
};
struct DitPhaseFlip {
  double p;
};
struct Depolarizing {
  double p;
};
/// Non-Markovian amplitude damping; lambda(t) from decay rate g and coupling gamma.
struct AdcNonMarkovian {
  double decay_rate;
  double coupling;
  double time;
};
/// Non-Markovian dephasing with kappa(p) = p (1 + eta (1-2p) sin(omega p)) / (1 + eta (1-2p)).
struct NmDephasing {
  double p;
  double strength;
  double frequency;
};
struct NmDepolarizing {
  double p;
  double alpha;
};

using ChannelModel =
    std::variant<DitFlip, PhaseFlip, DitPhaseFlip, Depolarizing, AdcNonMarkovian, NmDephasing, NmDepolarizing>;

enum class ChannelTag { dit_flip, phase_flip, dit_phase_flip, depolarizing, adc, nm_dephasing, nm_depolarizing };

inline constexpr ChannelTag kAllChannels[] = {ChannelTag::dit_flip,     ChannelTag::phase_flip,
                                              ChannelTag::dit_phase_flip, ChannelTag::depolarizing,
                                              ChannelTag::adc,          ChannelTag::nm_dephasing,
                                              ChannelTag::nm_depolarizing};

ChannelTag tag_of(const ChannelModel& model);
std::string_view tag_name(ChannelTag tag);
std::optional<ChannelTag> parse_tag(std::string_view name);

/// "p=0.25" / "g=1;gamma=10;t=5" style, fixed parameter order, 12 significant digits.
std::string describe_parameters(const ChannelModel& model);

/// Throws ParameterError if the model's parameter invariants fail for dimension N.
void validate(const ChannelModel& model, std::size_t dim);

/// lambda(t) = 1 - e^{-gt} (g/l sinh(lt/2) + cosh(lt/2))^2, l = sqrt(g^2 - 2 gamma g),
/// continued to sin/cos when l is imaginary.
double lambda_adc(double decay_rate, double coupling, double time);

/// e^{-gt/2} (g/l sinh(lt/2) + cosh(lt/2)). Signed: negative in parts of the
/// oscillating regime, where lambda passes through 1.
double adc_amplitude_factor(double decay_rate, double coupling, double time);

double kappa_dephasing(double p, double strength, double frequency);

struct NmDepolarizingLambdas {
  double lambda1;
  double lambda2;
};
NmDepolarizingLambdas nm_depolarizing_lambdas(double p, double alpha);

/// Operators plus the completeness relation sum E^dagger E = I (checked on
/// construction in the induced infinity norm against 1e-12).
class KrausSet {
 public:
  KrausSet(std::size_t dim, std::vector<Matrix> operators);

  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }

  /// || sum E^dagger E - I ||_inf
  double completeness_error() const;

 private:
  std::size_t dim_;
  std::vector<Matrix> operators_;
};

class CompletenessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Upper bound on dim^2 * size for kraus_set; beyond it the dense operator
/// list would not fit in memory.
inline constexpr std::size_t kMaxKrausEntries = std::size_t{1} << 25;

KrausSet kraus_set(const ChannelModel& model, std::size_t dim);

/// sum_k E_k rho E_k^dagger, computed as sum_k (E_k (E_k rho)^dagger)^dagger.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks);

/// <G| Lambda(|G><G|) |G> from the channel's closed form.
double analytic_fidelity(const ChannelModel& model, const Hypergraph& h);

/// Closed form for phase-flip and amplitude damping (the latter normalized by
/// 1/N); for the other channels, the l1 norm of the evolved state assembled
/// from its entry formula.
double analytic_coherence(const ChannelModel& model, const Hypergraph& h);

/// Entry-formula evolved state for the Weyl-mixture channels and the damping
/// channel. Independent of KrausSet and apply_channel.
Matrix analytic_evolved_state(const ChannelModel& model, const Hypergraph& h);

/// (-1 + sqrt(N-1)) / (N-2); requires N >= 3.
double adc_coherence_decrease_threshold(std::size_t dim);

}  // namespace hgnoise
