#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "koop/excitation.hpp"
#include "koop/model.hpp"
#include "koop/model_io.hpp"
#include "koop/rls.hpp"
#include "koop/robot_system.hpp"
#include "koop/utility_bank.hpp"

namespace koop {

// One experiment, fully determined: system, excitation, estimator, bank,
// control setup and seeds. Every defaulted field is echoed into the persisted
// effective config, and each CLI command's outputs are a pure function of it.
struct ExperimentConfig {
  int robots = 5;
  double dt = 0.1;
  int horizon = 500;
  ModelKind model = ModelKind::Linear;

  ExcitationKind excitation_kind = ExcitationKind::PiecewiseConstantRandom;
  double excitation_lower = -4.0;
  double excitation_upper = 3.0;
  int excitation_hold = 5;
  int excitation_terms = 3;

  double rho = 1.0;
  double p0_scale = 1e4;
  double reset_p0 = 1e4;
  double reset_p1 = 1e-6;
  std::optional<std::pair<double, double>> projection;  // uniform interval

  Eigen::MatrixXd goals;            // robots x 2
  Eigen::MatrixXd goal_velocities;  // robots x 2
  UtilityShape shape;
  Eigen::VectorXd weights;  // robots * 6

  std::optional<Eigen::VectorXd> operating_z1;  // default: the goal state

  double control_lower = -4.0;
  double control_upper = 3.0;
  int control_steps = 300;
  bool adaptive = true;
  int warmup = 0;  // identification steps run before an adaptive control phase

  std::uint64_t train_seed = 1;
  std::vector<std::uint64_t> test_seeds = {101, 102, 103, 104, 105};
  int test_horizon = 200;

  Eigen::VectorXd X0;  // 4 * robots

  // Derived objects.
  RobotSystem system() const { return make_robot_system(robots, dt); }
  UtilityBank bank() const { return UtilityBank(robots, goals, goal_velocities, shape); }
  ExcitationSpec train_excitation() const;
  OperatingPoint operating_point() const;
  RlsOptions rls_options(int regressor_dim, int output_dim) const;
  Eigen::VectorXd control_lower_vec() const {
    return Eigen::VectorXd::Constant(2 * robots, control_lower);
  }
  Eigen::VectorXd control_upper_vec() const {
    return Eigen::VectorXd::Constant(2 * robots, control_upper);
  }

  void validate_dimensions() const;
};

// Fully-defaulted experiment: robots on a circle of radius 8 with goals on a
// circle of radius 2, unit weights.
ExperimentConfig default_config(int robots = 5, ModelKind kind = ModelKind::Linear);

ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& cfg);

ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const ExperimentConfig& cfg);

}  // namespace koop
