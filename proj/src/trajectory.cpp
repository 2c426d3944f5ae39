#include "koop/trajectory.hpp"

namespace koop {

std::vector<LiftedSample> generate_trajectory(
    const RobotSystem& sys, const ObservableSet& obs, const Eigen::VectorXd& X0,
    const std::vector<Eigen::VectorXd>& inputs, const ObservableSet* extra) {
  if (X0.size() != sys.state_dim()) {
    throw ConfigError("generate_trajectory: X0 has length " +
                      std::to_string(X0.size()) + ", system expects " +
                      std::to_string(sys.state_dim()));
  }
  for (const auto& u : inputs) {
    if (u.size() != sys.input_dim()) {
      throw ConfigError("generate_trajectory: input has length " +
                        std::to_string(u.size()) + ", system expects " +
                        std::to_string(sys.input_dim()));
    }
  }

  auto lift_state = [&](const Eigen::VectorXd& X) {
    return extra ? lift(X, obs, *extra) : lift(X, obs);
  };

  std::vector<LiftedSample> samples;
  samples.reserve(inputs.size());
  Eigen::VectorXd X = X0;
  KoopmanState z = lift_state(X);
  for (const auto& u : inputs) {
    Eigen::VectorXd X_next = step(sys, X, u);
    KoopmanState z_next = lift_state(X_next);
    samples.push_back({z, u, z_next});
    X = std::move(X_next);
    z = std::move(z_next);
  }
  return samples;
}

}  // namespace koop
