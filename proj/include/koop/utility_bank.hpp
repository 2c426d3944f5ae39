#pragma once

#include <Eigen/Dense>

#include "koop/observables.hpp"

namespace koop {

inline constexpr int kComponentsPerRobot = 6;

// Shape parameters of the default component family. All components stay
// smooth and bounded on bounded state domains for positive softening values.
struct UtilityShape {
  double collision_scale = 1.0;  // strength of the neighbor penalty
  double collision_eps = 1.0;    // softening of the inverse-quadratic penalty
  double speed_eps = 1e-6;       // softening of the speed magnitude
  double align_eps = 1e-3;       // softening of the alignment cosine
};

// Per-robot grid of utility components phi_i^(j), j = 1..6:
//   1. negative squared goal distance          -|r_i - g_i|^2
//   2. negative squared velocity error         -|v_i - w_i|^2
//   3. inverse-quadratic nearest-neighbor
//      collision penalty                       -s / (min_j |r_i - r_j|^2 + e)
//   4. negative (softened) speed magnitude     -sqrt(|v_i|^2 + e)
//   5. goal-alignment cosine                   <v_i, g_i - r_i> / (softened norms)
//   6. constant bias                           1
//
// The flattened list, robot-major then component-minor, defines the lifted
// block: component (i, j) lands at index 6*i + j (0-based).
class UtilityBank {
 public:
  UtilityBank(int n_robots, Eigen::MatrixXd goals, Eigen::MatrixXd goal_velocities,
              UtilityShape shape = {});

  // Zero goal velocities, default shape.
  static UtilityBank with_defaults(int n_robots, const Eigen::MatrixXd& goals);

  int n_robots() const { return n_robots_; }
  int components_per_robot() const { return kComponentsPerRobot; }
  int size() const { return n_robots_ * kComponentsPerRobot; }

  // phi_i^(j)(X) for robot i in [0, n) and component j in [0, 6).
  double component(int robot, int j, const Eigen::VectorXd& X) const;

  // All components in flattening order. A non-finite value aborts with an
  // EvaluationError naming the (robot, component) pair.
  Eigen::VectorXd eval_components(const Eigen::VectorXd& X) const;

  // The bank as an ordered observable set; lift() over this set produces a
  // z2 block identical to eval_components().
  ObservableSet as_observables() const;

  const Eigen::MatrixXd& goals() const { return goals_; }
  const Eigen::MatrixXd& goal_velocities() const { return goal_velocities_; }
  const UtilityShape& shape() const { return shape_; }

 private:
  int n_robots_;
  Eigen::MatrixXd goals_;            // n x 2
  Eigen::MatrixXd goal_velocities_;  // n x 2
  UtilityShape shape_;
};

// Total utility w' z2. Lengths must agree.
double total_utility(const Eigen::VectorXd& weights, const Eigen::VectorXd& z2);

}  // namespace koop
