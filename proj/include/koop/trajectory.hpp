#pragma once

#include <vector>

#include "koop/observables.hpp"
#include "koop/robot_system.hpp"

namespace koop {

// One exact transition of the lifted system: the lifted state at step k, the
// applied control, and the exactly re-lifted successor. z_next.z2 is always
// the observable bank evaluated at the true successor state; no approximation
// enters data generation.
struct LiftedSample {
  KoopmanState z;
  Eigen::VectorXd u;
  KoopmanState z_next;
};

// Rolls the exact robot dynamics from X0 under the given input sequence and
// lifts every visited state. Sample k's z_next and sample k+1's z are the
// same object value, so chained samples overlap exactly.
std::vector<LiftedSample> generate_trajectory(
    const RobotSystem& sys, const ObservableSet& obs, const Eigen::VectorXd& X0,
    const std::vector<Eigen::VectorXd>& inputs, const ObservableSet* extra = nullptr);

}  // namespace koop
