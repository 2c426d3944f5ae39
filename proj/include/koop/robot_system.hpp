#pragma once

#include <Eigen/Dense>
#include <utility>

#include "koop/errors.hpp"

namespace koop {

// Exact discrete-time double-integrator dynamics for n planar robots.
//
// State layout: X = [x_1, y_1, ..., x_n, y_n, vx_1, vy_1, ..., vx_n, vy_n],
// input layout: U = [ax_1, ay_1, ..., ax_n, ay_n] (accelerations, m/s^2).
struct RobotSystem {
  int n_robots = 0;
  double dt = 0.0;
  Eigen::MatrixXd A;  // 4n x 4n
  Eigen::MatrixXd B;  // 4n x 2n

  int state_dim() const { return 4 * n_robots; }
  int input_dim() const { return 2 * n_robots; }
};

// A = [[I, dt I], [0, I]], B = [[0.5 dt^2 I], [dt I]] over the
// (positions, velocities) partition.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_system_matrices(int n_robots,
                                                                  double dt);

RobotSystem make_robot_system(int n_robots, double dt = 0.1);

// X(k+1) = A X(k) + B U(k).
Eigen::VectorXd step(const RobotSystem& sys, const Eigen::VectorXd& X,
                     const Eigen::VectorXd& U);

// Position of one robot within a state vector (2d segment views).
Eigen::Vector2d robot_position(const Eigen::VectorXd& X, int n_robots, int i);
Eigen::Vector2d robot_velocity(const Eigen::VectorXd& X, int n_robots, int i);

}  // namespace koop
