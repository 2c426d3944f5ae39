#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "koop/errors.hpp"

namespace koop {

enum class ExcitationKind {
  SinusoidSum,
  PseudoRandomBinary,
  PiecewiseConstantRandom,
};

std::string to_string(ExcitationKind kind);
ExcitationKind excitation_kind_from_string(const std::string& s);

// Deterministic excitation signal for identification experiments.
// Every sample lies inside the per-channel amplitude bounds, and the value
// at step k is a pure function of (spec, k).
struct ExcitationSpec {
  ExcitationKind kind = ExcitationKind::PiecewiseConstantRandom;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::uint64_t seed = 0;
  int horizon = 0;
  int hold = 5;            // steps per constant block (PCR / PRB kinds)
  int sinusoid_terms = 3;  // terms per channel (sinusoid kind)

  int channels() const { return static_cast<int>(lower.size()); }
};

ExcitationSpec make_excitation_spec(ExcitationKind kind, int channels,
                                    double lower, double upper,
                                    std::uint64_t seed, int horizon);

Eigen::VectorXd excitation(const ExcitationSpec& spec, int k);

// The full signal, one control vector per step.
std::vector<Eigen::VectorXd> excitation_signal(const ExcitationSpec& spec);

}  // namespace koop
