#include "koop/observables.hpp"

#include <cmath>

namespace koop {

Eigen::VectorXd ObservableSet::evaluate(const Eigen::VectorXd& X) const {
  Eigen::VectorXd out(size());
  for (int i = 0; i < size(); ++i) {
    const double v = entries_[static_cast<std::size_t>(i)].fn(X);
    if (!std::isfinite(v)) {
      throw EvaluationError("observable " + std::to_string(i) + " ('" +
                            entries_[static_cast<std::size_t>(i)].name +
                            "') evaluated to a non-finite value");
    }
    out(i) = v;
  }
  return out;
}

Eigen::VectorXd KoopmanState::lifted() const {
  Eigen::VectorXd out(z2.size() + z3.size());
  out << z2, z3;
  return out;
}

Eigen::VectorXd KoopmanState::stacked() const {
  Eigen::VectorXd out(dim());
  out << z1, z2, z3;
  return out;
}

KoopmanState lift(const Eigen::VectorXd& X, const ObservableSet& obs) {
  if (obs.empty()) throw ConfigError("lift: observable set is empty");
  if (!X.allFinite()) throw ConfigError("lift: non-finite state");
  KoopmanState z;
  z.z1 = X;
  z.z2 = obs.evaluate(X);
  z.z3.resize(0);
  return z;
}

KoopmanState lift(const Eigen::VectorXd& X, const ObservableSet& obs,
                  const ObservableSet& extra) {
  KoopmanState z = lift(X, obs);
  z.z3 = extra.evaluate(X);
  return z;
}

}  // namespace koop
