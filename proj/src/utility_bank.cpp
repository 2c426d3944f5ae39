#include "koop/utility_bank.hpp"

#include <cmath>
#include <limits>

namespace koop {

UtilityBank::UtilityBank(int n_robots, Eigen::MatrixXd goals,
                         Eigen::MatrixXd goal_velocities, UtilityShape shape)
    : n_robots_(n_robots),
      goals_(std::move(goals)),
      goal_velocities_(std::move(goal_velocities)),
      shape_(shape) {
  if (n_robots_ < 1) throw ConfigError("utility bank: robot count must be >= 1");
  if (goals_.rows() != n_robots_ || goals_.cols() != 2) {
    throw ConfigError("utility bank: goals must be n_robots x 2");
  }
  if (goal_velocities_.rows() != n_robots_ || goal_velocities_.cols() != 2) {
    throw ConfigError("utility bank: goal velocities must be n_robots x 2");
  }
}

UtilityBank UtilityBank::with_defaults(int n_robots, const Eigen::MatrixXd& goals) {
  return UtilityBank(n_robots, goals, Eigen::MatrixXd::Zero(n_robots, 2));
}

double UtilityBank::component(int robot, int j, const Eigen::VectorXd& X) const {
  const int n = n_robots_;
  if (X.size() != 4 * n) {
    throw ConfigError("utility bank: state has length " + std::to_string(X.size()) +
                      ", expected " + std::to_string(4 * n));
  }
  const Eigen::Vector2d r = X.segment<2>(2 * robot);
  const Eigen::Vector2d v = X.segment<2>(2 * n + 2 * robot);
  const Eigen::Vector2d g = goals_.row(robot);
  const Eigen::Vector2d w = goal_velocities_.row(robot);

  switch (j) {
    case 0:
      return -(r - g).squaredNorm();
    case 1:
      return -(v - w).squaredNorm();
    case 2: {
      if (n == 1) return 0.0;  // no neighbors, no penalty
      double d2 = std::numeric_limits<double>::infinity();
      for (int other = 0; other < n; ++other) {
        if (other == robot) continue;
        d2 = std::min(d2, (r - X.segment<2>(2 * other)).squaredNorm());
      }
      return -shape_.collision_scale / (d2 + shape_.collision_eps);
    }
    case 3:
      return -std::sqrt(v.squaredNorm() + shape_.speed_eps);
    case 4: {
      const Eigen::Vector2d to_goal = g - r;
      const double denom = std::sqrt(v.squaredNorm() + shape_.align_eps) *
                           std::sqrt(to_goal.squaredNorm() + shape_.align_eps);
      return v.dot(to_goal) / denom;
    }
    case 5:
      return 1.0;
    default:
      throw ConfigError("utility bank: component index " + std::to_string(j) +
                        " out of range");
  }
}

Eigen::VectorXd UtilityBank::eval_components(const Eigen::VectorXd& X) const {
  Eigen::VectorXd out(size());
  for (int i = 0; i < n_robots_; ++i) {
    for (int j = 0; j < kComponentsPerRobot; ++j) {
      const double value = component(i, j, X);
      if (!std::isfinite(value)) {
        throw EvaluationError("utility component (" + std::to_string(i) + "," +
                              std::to_string(j) + ") evaluated to a non-finite value");
      }
      out(kComponentsPerRobot * i + j) = value;
    }
  }
  return out;
}

ObservableSet UtilityBank::as_observables() const {
  ObservableSet obs;
  for (int i = 0; i < n_robots_; ++i) {
    for (int j = 0; j < kComponentsPerRobot; ++j) {
      obs.add("phi_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
              [bank = *this, i, j](const Eigen::VectorXd& X) {
                return bank.component(i, j, X);
              });
    }
  }
  return obs;
}

double total_utility(const Eigen::VectorXd& weights, const Eigen::VectorXd& z2) {
  if (weights.size() != z2.size()) {
    throw ConfigError("total_utility: weight length " + std::to_string(weights.size()) +
                      " does not match z2 length " + std::to_string(z2.size()));
  }
  if (!weights.allFinite()) throw ConfigError("total_utility: non-finite weights");
  return weights.dot(z2);
}

}  // namespace koop
