#include "koop/control.hpp"

#include <cmath>

namespace koop {

Eigen::MatrixXd effective_gain(const LinearKoopmanModel& model,
                               const Eigen::VectorXd& z1, const Eigen::VectorXd& z2) {
  const ModelDims d = model.dims();
  if (z1.size() != d.n1 || z2.size() != d.n2) {
    throw ConfigError("effective_gain: state lengths (" + std::to_string(z1.size()) +
                      ", " + std::to_string(z2.size()) + ") do not match model (" +
                      std::to_string(d.n1) + ", " + std::to_string(d.n2) + ")");
  }
  return model.B2;
}

Eigen::MatrixXd effective_gain(const BilinearKoopmanModel& model,
                               const Eigen::VectorXd& z1, const Eigen::VectorXd& z2) {
  const ModelDims d = model.dims();
  if (z1.size() != d.n1 || z2.size() != d.n2) {
    throw ConfigError("effective_gain: state lengths (" + std::to_string(z1.size()) +
                      ", " + std::to_string(z2.size()) + ") do not match model (" +
                      std::to_string(d.n1) + ", " + std::to_string(d.n2) + ")");
  }
  const Eigen::VectorXd dz1 = z1 - model.x0.z1;
  const Eigen::VectorXd dz2 = z2 - model.x0.z2;
  // Row i of G4 is dz1' H_{i,13}; with Phi4 packed row-major over (p, c),
  // G4(i, c) = sum_p dz1_p Phi4(p*m + c, i). Same pattern for G5.
  Eigen::MatrixXd B_eff = model.B2;
  for (int i = 0; i < d.n2; ++i) {
    for (int c = 0; c < d.m; ++c) {
      double g4 = 0.0, g5 = 0.0;
      for (int p = 0; p < d.n1; ++p) g4 += dz1(p) * model.Phi4(p * d.m + c, i);
      for (int a = 0; a < d.n2; ++a) g5 += dz2(a) * model.Phi5(a * d.m + c, i);
      B_eff(i, c) += g4 + g5;
    }
  }
  return B_eff;
}

Eigen::MatrixXd effective_gain(const KoopmanModel& model, const Eigen::VectorXd& z1,
                               const Eigen::VectorXd& z2) {
  return std::visit([&](const auto& m) { return effective_gain(m, z1, z2); }, model);
}

BoxLpResult solve_box_lp(const Eigen::VectorXd& c, const Eigen::VectorXd& lower,
                         const Eigen::VectorXd& upper) {
  if (c.size() != lower.size() || c.size() != upper.size()) {
    throw ConfigError("solve_box_lp: dimension mismatch");
  }
  if (!c.allFinite()) throw ConfigError("solve_box_lp: non-finite objective");
  if ((lower.array() >= upper.array()).any()) {
    throw ConfigError("solve_box_lp: need lower < upper on every channel");
  }
  BoxLpResult result;
  result.u.resize(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (c(i) > 0.0) {
      result.u(i) = upper(i);
    } else if (c(i) < 0.0) {
      result.u(i) = lower(i);
    } else {
      result.u(i) = std::clamp(0.0, lower(i), upper(i));
    }
  }
  result.value = c.dot(result.u);
  return result;
}

ControlDecision optimal_control(const ControlProblem& problem,
                                const Eigen::VectorXd& z1, const Eigen::VectorXd& z2) {
  const ModelDims d = model_dims(problem.model);
  if (problem.weights.size() != d.n2) {
    throw ConfigError("optimal_control: weight length " +
                      std::to_string(problem.weights.size()) + " does not match model " +
                      std::to_string(d.n2));
  }
  const Eigen::MatrixXd B_eff = effective_gain(problem.model, z1, z2);
  const Eigen::VectorXd c = B_eff.transpose() * problem.weights;
  BoxLpResult lp = solve_box_lp(c, problem.lower, problem.upper);
  ControlDecision decision;
  decision.predicted_utility =
      problem.weights.dot(predict(problem.model, z1, z2, lp.u));
  decision.u = std::move(lp.u);
  return decision;
}

KoopmanModel AdaptiveController::current_model() const {
  if (kind == ModelKind::Linear) {
    return linear_from_theta(estimator.theta(), dims);
  }
  return BilinearKoopmanModel::unpack_theta(estimator.theta(), x0, dims);
}

RegressorSample AdaptiveController::make_sample(const LiftedSample& s) const {
  return kind == ModelKind::Linear ? build_linear_regressor(s)
                                   : build_bilinear_regressor(s, x0);
}

namespace {

Eigen::VectorXd goal_distances(const UtilityBank& bank, const Eigen::VectorXd& X) {
  const int n = bank.n_robots();
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    d(i) = (X.segment<2>(2 * i) - bank.goals().row(i).transpose()).norm();
  }
  return d;
}

void finish_record(ClosedLoopRecord& rec, const UtilityBank& bank) {
  rec.initial_goal_distance = goal_distances(bank, rec.X.front());
  rec.final_goal_distance = goal_distances(bank, rec.X.back());
  rec.cumulative_utility = 0.0;
  for (double u : rec.utility_realized) rec.cumulative_utility += u;
}

}  // namespace

ClosedLoopRecord closed_loop_run(const RobotSystem& sys, const UtilityBank& bank,
                                 const Eigen::VectorXd& weights,
                                 const KoopmanModel& model, const Eigen::VectorXd& X0,
                                 int steps, const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper) {
  const ObservableSet obs = bank.as_observables();
  ControlProblem problem{weights, lower, upper, model};

  ClosedLoopRecord rec;
  Eigen::VectorXd X = X0;
  KoopmanState z = lift(X, obs);
  rec.X.push_back(X);
  rec.z2.push_back(z.z2);
  for (int k = 0; k < steps; ++k) {
    const ControlDecision decision = optimal_control(problem, z.z1, z.z2);
    const Eigen::VectorXd prediction = predict(model, z.z1, z.z2, decision.u);
    X = step(sys, X, decision.u);
    z = lift(X, obs);
    rec.U.push_back(decision.u);
    rec.utility_predicted.push_back(decision.predicted_utility);
    rec.utility_realized.push_back(total_utility(weights, z.z2));
    rec.eps_norm.push_back((prediction - z.z2).norm());
    rec.X.push_back(X);
    rec.z2.push_back(z.z2);
    rec.steps_completed = k + 1;
  }
  finish_record(rec, bank);
  return rec;
}

ClosedLoopRecord closed_loop_run(const RobotSystem& sys, const UtilityBank& bank,
                                 const Eigen::VectorXd& weights,
                                 AdaptiveController& controller,
                                 const Eigen::VectorXd& X0, int steps,
                                 const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper, RlsLog* log) {
  const ObservableSet obs = bank.as_observables();

  ClosedLoopRecord rec;
  Eigen::VectorXd X = X0;
  KoopmanState z = lift(X, obs);
  rec.X.push_back(X);
  rec.z2.push_back(z.z2);
  for (int k = 0; k < steps; ++k) {
    if (k > 0) {
      // Absorb the previous transition before deciding the next control.
      const LiftedSample prev{
          KoopmanState{rec.X[k - 1], rec.z2[k - 1], Eigen::VectorXd()},
          rec.U[k - 1],
          KoopmanState{rec.X[k], rec.z2[k], Eigen::VectorXd()}};
      const RlsStepResult r = controller.estimator.update(controller.make_sample(prev));
      if (log) log->push(controller.estimator.steps() - 1, r);
      if (r.reset) ++rec.reset_count;
      rec.eps_norm.push_back(r.eps.norm());
      if (!controller.estimator.finite()) {
        rec.diverged = true;
        finish_record(rec, bank);
        return rec;
      }
    } else {
      rec.eps_norm.push_back(0.0);
    }

    ControlProblem problem{weights, lower, upper, controller.current_model()};
    const ControlDecision decision = optimal_control(problem, z.z1, z.z2);
    X = step(sys, X, decision.u);
    z = lift(X, obs);
    rec.U.push_back(decision.u);
    rec.utility_predicted.push_back(decision.predicted_utility);
    rec.utility_realized.push_back(total_utility(weights, z.z2));
    rec.X.push_back(X);
    rec.z2.push_back(z.z2);
    rec.steps_completed = k + 1;
  }
  finish_record(rec, bank);
  return rec;
}

}  // namespace koop
