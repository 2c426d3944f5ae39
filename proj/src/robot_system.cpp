#include "koop/robot_system.hpp"

namespace koop {

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_system_matrices(int n_robots,
                                                                  double dt) {
  if (n_robots < 1) {
    throw ConfigError("robot count must be >= 1, got " + std::to_string(n_robots));
  }
  if (!(dt > 0.0)) {
    throw ConfigError("sampling interval must be positive, got " + std::to_string(dt));
  }
  const int p = 2 * n_robots;  // position block size
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(2 * p, 2 * p);
  A.topRightCorner(p, p) = dt * Eigen::MatrixXd::Identity(p, p);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(2 * p, p);
  B.topRows(p) = 0.5 * dt * dt * Eigen::MatrixXd::Identity(p, p);
  B.bottomRows(p) = dt * Eigen::MatrixXd::Identity(p, p);
  return {A, B};
}

RobotSystem make_robot_system(int n_robots, double dt) {
  auto [A, B] = build_system_matrices(n_robots, dt);
  return RobotSystem{n_robots, dt, std::move(A), std::move(B)};
}

Eigen::VectorXd step(const RobotSystem& sys, const Eigen::VectorXd& X,
                     const Eigen::VectorXd& U) {
  if (X.size() != sys.state_dim() || U.size() != sys.input_dim()) {
    throw ConfigError("step: dimension mismatch, state " + std::to_string(X.size()) +
                      " vs " + std::to_string(sys.state_dim()) + ", input " +
                      std::to_string(U.size()) + " vs " +
                      std::to_string(sys.input_dim()));
  }
  return sys.A * X + sys.B * U;
}

Eigen::Vector2d robot_position(const Eigen::VectorXd& X, int n_robots, int i) {
  return X.segment<2>(2 * i);
}

Eigen::Vector2d robot_velocity(const Eigen::VectorXd& X, int n_robots, int i) {
  return X.segment<2>(2 * n_robots + 2 * i);
}

}  // namespace koop
