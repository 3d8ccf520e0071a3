#include "hgnoise/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hgnoise/csv.hpp"
#include "hgnoise/weyl.hpp"

namespace hgnoise {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_range(double x, double lo, double hi) { return x >= lo && x <= hi; }  // false for NaN

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void require_probability(double p, std::string_view channel) {
  require(in_range(p, 0.0, 1.0), std::string(channel) + ": p = " + format_number(p) + " outside [0, 1]");
}

double dsq(std::size_t dim) { return static_cast<double>(dim) * static_cast<double>(dim); }

// Which Weyl operators carry the branch weight.
enum class BranchSet {
  shifts,            // U_{0,s}, s = 1..N-1
  phases,            // U_{r,0}, r = 1..N-1
  all_but_identity,  // U_{r,s}, (r,s) != (0,0)
};

// rho -> identity_weight * rho + branch_weight * sum_{branches} U rho U^dagger
struct WeylMixture {
  double identity_weight;
  double branch_weight;
  BranchSet branches;
};

double nm_depolarizing_identity_weight(double p, double alpha, std::size_t dim) {
  const auto lambdas = nm_depolarizing_lambdas(p, alpha);
  const double n2 = dsq(dim);
  return 1.0 + (n2 - 1.0) * (1.0 - p) * lambdas.lambda1 / n2;
}

std::optional<WeylMixture> weyl_mixture(const ChannelModel& model, std::size_t dim) {
  const double n = static_cast<double>(dim);
  const double n2 = dsq(dim);
  return std::visit(
      Overloaded{
          [&](const DitFlip& c) -> std::optional<WeylMixture> {
            return WeylMixture{1.0 - c.p, c.p / (n - 1.0), BranchSet::shifts};
          },
          [&](const PhaseFlip& c) -> std::optional<WeylMixture> {
            return WeylMixture{1.0 - c.p, c.p / (n - 1.0), BranchSet::phases};
          },
          [&](const DitPhaseFlip& c) -> std::optional<WeylMixture> {
            return WeylMixture{1.0 - c.p, c.p / (n2 - 1.0), BranchSet::all_but_identity};
          },
          [&](const Depolarizing& c) -> std::optional<WeylMixture> {
            return WeylMixture{1.0 - (n2 - 1.0) * c.p / n2, c.p / n2, BranchSet::all_but_identity};
          },
          [&](const AdcNonMarkovian&) -> std::optional<WeylMixture> { return std::nullopt; },
          [&](const NmDephasing& c) -> std::optional<WeylMixture> {
            const double kappa = kappa_dephasing(c.p, c.strength, c.frequency);
            return WeylMixture{1.0 - kappa, kappa / (n2 - 1.0), BranchSet::all_but_identity};
          },
          [&](const NmDepolarizing& c) -> std::optional<WeylMixture> {
            const double lambda2 = nm_depolarizing_lambdas(c.p, c.alpha).lambda2;
            return WeylMixture{nm_depolarizing_identity_weight(c.p, c.alpha, dim), c.p * lambda2 / n2,
                               BranchSet::all_but_identity};
          },
      },
      model);
}

template <class F>
void for_each_branch(BranchSet set, std::size_t dim, F&& f) {
  switch (set) {
    case BranchSet::shifts:
      for (std::size_t s = 1; s < dim; ++s) f(WeylIndex{0, s});
      break;
    case BranchSet::phases:
      for (std::size_t r = 1; r < dim; ++r) f(WeylIndex{r, 0});
      break;
    case BranchSet::all_but_identity:
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
          if (r != 0 || s != 0) f(WeylIndex{r, s});
        }
      }
      break;
  }
}

std::size_t branch_count(BranchSet set, std::size_t dim) {
  return set == BranchSet::all_but_identity ? dim * dim - 1 : dim - 1;
}

double checked_sqrt(double weight, std::string_view what) {
  // Weights come from closed forms in [0, 1]; anything below -1e-15 is a bad model.
  require(weight >= -1e-15, std::string(what) + " weight " + format_number(weight) + " is negative");
  return std::sqrt(std::max(weight, 0.0));
}

double adc_lambda(const AdcNonMarkovian& c) { return lambda_adc(c.decay_rate, c.coupling, c.time); }

double adc_fidelity(double lambda, std::size_t dim) {
  const double n = static_cast<double>(dim);
  const double keep = std::sqrt(1.0 - lambda);
  const double head = 1.0 + (n - 1.0) * keep;
  return (head * head + lambda * (n - 1.0)) / (n * n);
}

// l1 coherence of the damped state, with the 1/N every entry of rho(t) carries.
double adc_coherence(double lambda, std::size_t dim) {
  const double n = static_cast<double>(dim);
  const double keep = std::sqrt(1.0 - lambda);
  return (n - 1.0) / n * (2.0 * keep + (n - 2.0) * (1.0 - lambda));
}

Matrix weyl_mixture_state(const WeylMixture& mix, const Hypergraph& h) {
  const std::size_t n = h.dimension();
  const double inv_n = 1.0 / static_cast<double>(n);
  const auto sign = sign_vector(h);
  const RootsOfUnity roots(n);

  // Phase sums over the r values allowed with a given shift s, indexed by
  // k = (i - j) mod N: every r, or every r except 0.
  std::vector<Complex> all_r(n), nonzero_r(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum = 0.0;
    for (std::size_t r = 1; r < n; ++r) sum += roots(k * r);
    nonzero_r[k] = sum;
    all_r[k] = sum + 1.0;
  }

  Matrix rho(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (i + n - j) % n;
      Complex branch = 0.0;
      switch (mix.branches) {
        case BranchSet::shifts:
          for (std::size_t s = 1; s < n; ++s) branch += sign[(i + s) % n] * sign[(j + s) % n];
          break;
        case BranchSet::phases:
          branch = static_cast<double>(sign[i] * sign[j]) * nonzero_r[k];
          break;
        case BranchSet::all_but_identity:
          branch = static_cast<double>(sign[i] * sign[j]) * nonzero_r[k];
          for (std::size_t s = 1; s < n; ++s) {
            branch += static_cast<double>(sign[(i + s) % n] * sign[(j + s) % n]) * all_r[k];
          }
          break;
      }
      rho(i, j) = inv_n * (mix.identity_weight * sign[i] * sign[j] + mix.branch_weight * branch);
    }
  }
  return rho;
}

Matrix adc_state(double lambda, const Hypergraph& h) {
  const std::size_t n = h.dimension();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double keep = std::sqrt(1.0 - lambda);
  const auto sign = sign_vector(h);
  Matrix rho(n);
  rho(0, 0) = ((static_cast<double>(n) - 1.0) * lambda + 1.0) * inv_n;
  for (std::size_t j = 1; j < n; ++j) {
    rho(0, j) = keep * sign[j] * inv_n;
    rho(j, 0) = keep * sign[j] * inv_n;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) rho(i, j) = (1.0 - lambda) * sign[i] * sign[j] * inv_n;
  }
  return rho;
}

}  // namespace

ChannelTag tag_of(const ChannelModel& model) {
  return std::visit(Overloaded{
                        [](const DitFlip&) { return ChannelTag::dit_flip; },
                        [](const PhaseFlip&) { return ChannelTag::phase_flip; },
                        [](const DitPhaseFlip&) { return ChannelTag::dit_phase_flip; },
                        [](const Depolarizing&) { return ChannelTag::depolarizing; },
                        [](const AdcNonMarkovian&) { return ChannelTag::adc; },
                        [](const NmDephasing&) { return ChannelTag::nm_dephasing; },
                        [](const NmDepolarizing&) { return ChannelTag::nm_depolarizing; },
                    },
                    model);
}

std::string_view tag_name(ChannelTag tag) {
  switch (tag) {
    case ChannelTag::dit_flip:
      return "dit_flip";
    case ChannelTag::phase_flip:
      return "phase_flip";
    case ChannelTag::dit_phase_flip:
      return "dit_phase_flip";
    case ChannelTag::depolarizing:
      return "depolarizing";
    case ChannelTag::adc:
      return "adc";
    case ChannelTag::nm_dephasing:
      return "nm_dephasing";
    case ChannelTag::nm_depolarizing:
      return "nm_depolarizing";
  }
  return "unknown";
}

std::optional<ChannelTag> parse_tag(std::string_view name) {
  for (ChannelTag tag : kAllChannels) {
    if (tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

std::string describe_parameters(const ChannelModel& model) {
  auto kv = [](std::string_view key, double value) { return std::string(key) + "=" + format_number(value); };
  return std::visit(Overloaded{
                        [&](const DitFlip& c) { return kv("p", c.p); },
                        [&](const PhaseFlip& c) { return kv("p", c.p); },
                        [&](const DitPhaseFlip& c) { return kv("p", c.p); },
                        [&](const Depolarizing& c) { return kv("p", c.p); },
                        [&](const AdcNonMarkovian& c) {
                          return kv("g", c.decay_rate) + ";" + kv("gamma", c.coupling) + ";" + kv("t", c.time);
                        },
                        [&](const NmDephasing& c) {
                          return kv("p", c.p) + ";" + kv("eta", c.strength) + ";" + kv("omega", c.frequency);
                        },
                        [&](const NmDepolarizing& c) { return kv("p", c.p) + ";" + kv("alpha", c.alpha); },
                    },
                    model);
}

void validate(const ChannelModel& model, std::size_t dim) {
  require(dim >= 2, "channel dimension must be at least 2, got " + std::to_string(dim));
  std::visit(Overloaded{
                 [](const DitFlip& c) { require_probability(c.p, "dit_flip"); },
                 [](const PhaseFlip& c) { require_probability(c.p, "phase_flip"); },
                 [](const DitPhaseFlip& c) { require_probability(c.p, "dit_phase_flip"); },
                 [](const Depolarizing& c) { require_probability(c.p, "depolarizing"); },
                 [](const AdcNonMarkovian& c) { adc_lambda(c); },
                 [](const NmDephasing& c) { kappa_dephasing(c.p, c.strength, c.frequency); },
                 [dim](const NmDepolarizing& c) {
                   require_probability(c.p, "nm_depolarizing");
                   require(in_range(c.alpha, 0.0, 1.0),
                           "nm_depolarizing: alpha = " + format_number(c.alpha) + " outside [0, 1]");
                   const double w = nm_depolarizing_identity_weight(c.p, c.alpha, dim);
                   require(w >= 0.0, "nm_depolarizing: identity weight " + format_number(w) + " is negative");
                 },
             },
             model);
}

double adc_amplitude_factor(double g, double gamma, double t) {
  require(std::isfinite(g) && g > 0.0, "adc: decay rate g must be > 0, got " + format_number(g));
  require(std::isfinite(gamma) && gamma >= 0.0, "adc: coupling gamma must be >= 0, got " + format_number(gamma));
  require(std::isfinite(t) && t >= 0.0, "adc: time t must be >= 0, got " + format_number(t));

  const double half_gt = 0.5 * g * t;
  const double disc = g * g - 2.0 * gamma * g;
  if (disc > 0.0) {
    // g/l sinh(x) = (gt/2) sinh(x)/x with x = lt/2; the e^{-gt/2} factor is
    // folded into the exponentials so large t cannot overflow.
    const double x = 0.5 * std::sqrt(disc) * t;
    if (x < 1.0) {
      const double sinhc = x > 0.0 ? std::sinh(x) / x : 1.0;
      return std::exp(-half_gt) * (std::cosh(x) + half_gt * sinhc);
    }
    const double up = std::exp(x - half_gt);
    const double down = std::exp(-x - half_gt);
    return 0.5 * (up + down) + half_gt * 0.5 * (up - down) / x;
  }
  if (disc < 0.0) {
    const double x = 0.5 * std::sqrt(-disc) * t;
    const double sinc = x > 0.0 ? std::sin(x) / x : 1.0;
    return std::exp(-half_gt) * (std::cos(x) + half_gt * sinc);
  }
  return std::exp(-half_gt) * (1.0 + half_gt);
}

double lambda_adc(double g, double gamma, double t) {
  const double factor = adc_amplitude_factor(g, gamma, t);
  const double lambda = 1.0 - factor * factor;
  require(lambda >= -kExactTolerance && lambda <= 1.0 + kExactTolerance,
          "adc: lambda = " + format_number(lambda) + " outside [0, 1]");
  return std::clamp(lambda, 0.0, 1.0);
}

double kappa_dephasing(double p, double strength, double frequency) {
  require(in_range(p, 0.0, 0.5), "nm_dephasing: p = " + format_number(p) + " outside [0, 1/2]");
  require(std::isfinite(strength) && strength >= 0.0, "nm_dephasing: eta must be >= 0");
  require(std::isfinite(frequency) && frequency >= 0.0, "nm_dephasing: omega must be >= 0");
  const double damp = strength * (1.0 - 2.0 * p);
  const double kappa = p * (1.0 + damp * std::sin(frequency * p)) / (1.0 + damp);
  require(in_range(kappa, 0.0, 1.0), "nm_dephasing: kappa = " + format_number(kappa) + " outside [0, 1]");
  return kappa;
}

NmDepolarizingLambdas nm_depolarizing_lambdas(double p, double alpha) {
  return {-alpha * p, alpha * (1.0 - p)};
}

KrausSet::KrausSet(std::size_t dim, std::vector<Matrix> operators) : dim_(dim), operators_(std::move(operators)) {
  if (operators_.empty()) throw CompletenessError("empty Kraus set");
  for (const auto& e : operators_) {
    if (e.dim() != dim_) {
      throw DimensionError("Kraus operator of dimension " + std::to_string(e.dim()) + " in a set of dimension " +
                           std::to_string(dim_));
    }
  }
  const double err = completeness_error();
  if (!(err < kExactTolerance)) {
    throw CompletenessError("Kraus operators are not complete: ||sum E^dagger E - I|| = " + format_number(err));
  }
}

double KrausSet::completeness_error() const {
  Matrix sum(dim_);
  for (const auto& e : operators_) sum += gram(e);
  sum -= Matrix::identity(dim_);
  return induced_inf_norm(sum);
}

KrausSet kraus_set(const ChannelModel& model, std::size_t dim) {
  validate(model, dim);
  const auto mix = weyl_mixture(model, dim);
  const std::size_t count = mix ? branch_count(mix->branches, dim) + 1 : dim;
  if (count * dim * dim > kMaxKrausEntries) {
    throw DimensionError("dense Kraus set for N = " + std::to_string(dim) + " exceeds the memory budget");
  }

  std::vector<Matrix> ops;
  ops.reserve(count);
  if (!mix) {
    const double lambda = adc_lambda(std::get<AdcNonMarkovian>(model));
    Matrix e0(dim);
    e0(0, 0) = 1.0;
    const double keep = std::sqrt(1.0 - lambda);
    for (std::size_t i = 1; i < dim; ++i) e0(i, i) = keep;
    ops.push_back(std::move(e0));
    const double decay = std::sqrt(lambda);
    for (std::size_t i = 1; i < dim; ++i) {
      Matrix ei(dim);
      ei(0, i) = decay;
      ops.push_back(std::move(ei));
    }
    return KrausSet(dim, std::move(ops));
  }

  ops.push_back(checked_sqrt(mix->identity_weight, "identity") * Matrix::identity(dim));
  const double branch_scale = checked_sqrt(mix->branch_weight, "branch");
  for_each_branch(mix->branches, dim,
                  [&](WeylIndex idx) { ops.push_back(branch_scale * weyl_operator(dim, idx)); });
  return KrausSet(dim, std::move(ops));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks) {
  const std::size_t n = rho.dim();
  if (ks.dim() != n) {
    throw DimensionError("channel of dimension " + std::to_string(ks.dim()) + " applied to a state of dimension " +
                         std::to_string(n));
  }
  Matrix out(n);
  for (const auto& e : ks.operators()) {
    // E rho E^dagger = (E (E rho)^dagger)^dagger keeps E on the left of both
    // products, where its zero entries are skipped.
    const Matrix e_rho = multiply(e, rho.matrix());
    const Matrix conj_term = multiply(e, e_rho.adjoint());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) += std::conj(conj_term(j, i));
    }
  }
  return DensityMatrix(std::move(out));
}

double analytic_fidelity(const ChannelModel& model, const Hypergraph& h) {
  const std::size_t dim = h.dimension();
  validate(model, dim);
  if (const auto* c = std::get_if<PhaseFlip>(&model)) return 1.0 - c->p;
  if (const auto* c = std::get_if<AdcNonMarkovian>(&model)) return adc_fidelity(adc_lambda(*c), dim);

  const WeylMixture mix = *weyl_mixture(model, dim);
  const auto signs = sign_vector(h);
  const RootsOfUnity roots(dim);
  double overlap_sq = 0.0;
  for_each_branch(mix.branches, dim, [&](WeylIndex idx) { overlap_sq += std::norm(overlap_weyl(signs, roots, idx)); });
  return mix.identity_weight + mix.branch_weight * overlap_sq;
}

Matrix analytic_evolved_state(const ChannelModel& model, const Hypergraph& h) {
  const std::size_t dim = h.dimension();
  validate(model, dim);
  if (const auto* c = std::get_if<AdcNonMarkovian>(&model)) return adc_state(adc_lambda(*c), h);
  return weyl_mixture_state(*weyl_mixture(model, dim), h);
}

double analytic_coherence(const ChannelModel& model, const Hypergraph& h) {
  const std::size_t dim = h.dimension();
  validate(model, dim);
  if (const auto* c = std::get_if<PhaseFlip>(&model)) {
    const double n = static_cast<double>(dim);
    return (n - 1.0) * std::abs(1.0 - c->p - c->p / (n - 1.0));
  }
  if (const auto* c = std::get_if<AdcNonMarkovian>(&model)) return adc_coherence(adc_lambda(*c), dim);
  return l1_coherence(analytic_evolved_state(model, h));
}

double adc_coherence_decrease_threshold(std::size_t dim) {
  require(dim >= 3, "coherence-decrease threshold needs N >= 3, got " + std::to_string(dim));
  const double n = static_cast<double>(dim);
  return (-1.0 + std::sqrt(n - 1.0)) / (n - 2.0);
}

}  // namespace hgnoise
