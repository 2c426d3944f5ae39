#include "koop/excitation.hpp"

#include <cmath>

#include "koop/rng.hpp"

namespace koop {

std::string to_string(ExcitationKind kind) {
  switch (kind) {
    case ExcitationKind::SinusoidSum: return "sinusoid-sum";
    case ExcitationKind::PseudoRandomBinary: return "pseudo-random-binary";
    case ExcitationKind::PiecewiseConstantRandom: return "piecewise-constant-random";
  }
  return "unknown";
}

ExcitationKind excitation_kind_from_string(const std::string& s) {
  if (s == "sinusoid-sum") return ExcitationKind::SinusoidSum;
  if (s == "pseudo-random-binary") return ExcitationKind::PseudoRandomBinary;
  if (s == "piecewise-constant-random") return ExcitationKind::PiecewiseConstantRandom;
  throw ConfigError("unknown excitation kind '" + s + "'");
}

ExcitationSpec make_excitation_spec(ExcitationKind kind, int channels,
                                    double lower, double upper,
                                    std::uint64_t seed, int horizon) {
  if (channels < 1) throw ConfigError("excitation: need at least one channel");
  if (!(lower <= upper)) throw ConfigError("excitation: lower bound exceeds upper");
  ExcitationSpec spec;
  spec.kind = kind;
  spec.lower = Eigen::VectorXd::Constant(channels, lower);
  spec.upper = Eigen::VectorXd::Constant(channels, upper);
  spec.seed = seed;
  spec.horizon = horizon;
  return spec;
}

namespace {

void check_spec(const ExcitationSpec& spec, int k) {
  if (spec.lower.size() != spec.upper.size() || spec.channels() < 1) {
    throw ConfigError("excitation: bound vectors disagree in length");
  }
  if ((spec.lower.array() > spec.upper.array()).any()) {
    throw ConfigError("excitation: lower bound exceeds upper on some channel");
  }
  if (spec.hold < 1) throw ConfigError("excitation: hold must be >= 1");
  if (k < 0 || k >= spec.horizon) {
    throw std::out_of_range("excitation: step " + std::to_string(k) +
                            " outside horizon " + std::to_string(spec.horizon));
  }
}

}  // namespace

Eigen::VectorXd excitation(const ExcitationSpec& spec, int k) {
  check_spec(spec, k);
  const int nc = spec.channels();
  Eigen::VectorXd u(nc);
  switch (spec.kind) {
    case ExcitationKind::PiecewiseConstantRandom: {
      SplitMix64 g(mix_seed(spec.seed, static_cast<std::uint64_t>(k / spec.hold)));
      for (int c = 0; c < nc; ++c) u(c) = g.uniform(spec.lower(c), spec.upper(c));
      break;
    }
    case ExcitationKind::PseudoRandomBinary: {
      SplitMix64 g(mix_seed(spec.seed, static_cast<std::uint64_t>(k / spec.hold)));
      for (int c = 0; c < nc; ++c) {
        u(c) = (g.next_u64() & 1u) ? spec.upper(c) : spec.lower(c);
      }
      break;
    }
    case ExcitationKind::SinusoidSum: {
      const int terms = std::max(1, spec.sinusoid_terms);
      for (int c = 0; c < nc; ++c) {
        // Frequencies and phases depend on (seed, channel) only, so the
        // signal is smooth in k and random-access in evaluation order.
        SplitMix64 g(mix_seed(spec.seed, static_cast<std::uint64_t>(c)));
        double s = 0.0;
        for (int t = 0; t < terms; ++t) {
          const double freq = g.uniform(0.01, 0.12);  // cycles per step
          const double phase = g.uniform(0.0, 2.0 * M_PI);
          s += std::sin(2.0 * M_PI * freq * k + phase);
        }
        s /= terms;  // normalized to [-1, 1]
        const double center = 0.5 * (spec.lower(c) + spec.upper(c));
        const double half = 0.5 * (spec.upper(c) - spec.lower(c));
        u(c) = center + half * s;
      }
      break;
    }
  }
  // Clamp to guard against rounding at the interval edges.
  return u.cwiseMax(spec.lower).cwiseMin(spec.upper);
}

std::vector<Eigen::VectorXd> excitation_signal(const ExcitationSpec& spec) {
  std::vector<Eigen::VectorXd> signal;
  signal.reserve(static_cast<std::size_t>(std::max(0, spec.horizon)));
  for (int k = 0; k < spec.horizon; ++k) signal.push_back(excitation(spec, k));
  return signal;
}

}  // namespace koop
