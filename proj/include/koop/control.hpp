#pragma once

#include <Eigen/Dense>
#include <vector>

#include "koop/model.hpp"
#include "koop/rls.hpp"
#include "koop/robot_system.hpp"
#include "koop/utility_bank.hpp"

namespace koop {

// One-step optimal control: maximize the predicted total utility, affine in
// U under either model, over a per-channel control box.
struct ControlProblem {
  Eigen::VectorXd weights;  // omega, length n2
  Eigen::VectorXd lower;    // per input channel
  Eigen::VectorXd upper;
  KoopmanModel model;
};

// d(predicted z2)/dU. Linear model: B2. Bilinear: B2 + G4 + G5 where row i
// of G4 is (z1 - z10)' H_{i,13} and of G5 is (z2 - z20)' H_{i,23}.
Eigen::MatrixXd effective_gain(const LinearKoopmanModel& model,
                               const Eigen::VectorXd& z1, const Eigen::VectorXd& z2);
Eigen::MatrixXd effective_gain(const BilinearKoopmanModel& model,
                               const Eigen::VectorXd& z1, const Eigen::VectorXd& z2);
Eigen::MatrixXd effective_gain(const KoopmanModel& model, const Eigen::VectorXd& z1,
                               const Eigen::VectorXd& z2);

struct BoxLpResult {
  Eigen::VectorXd u;
  double value = 0.0;  // c' u at the optimum
};

// max c' U subject to lower <= U <= upper. The objective separates per
// channel, so each component sits at a bound; a zero coefficient takes the
// minimum-effort value clamp(0, lower_i, upper_i).
BoxLpResult solve_box_lp(const Eigen::VectorXd& c, const Eigen::VectorXd& lower,
                         const Eigen::VectorXd& upper);

struct ControlDecision {
  Eigen::VectorXd u;
  double predicted_utility = 0.0;  // omega' predict(z1, z2, u)
};

ControlDecision optimal_control(const ControlProblem& problem,
                                const Eigen::VectorXd& z1, const Eigen::VectorXd& z2);

// Adaptive controller state: the estimator plus what is needed to interpret
// its parameter matrix as a model.
struct AdaptiveController {
  RlsEstimator estimator;
  ModelKind kind = ModelKind::Linear;
  OperatingPoint x0;  // used by the bilinear kind
  ModelDims dims;

  KoopmanModel current_model() const;
  RegressorSample make_sample(const LiftedSample& s) const;
};

struct ClosedLoopRecord {
  std::vector<Eigen::VectorXd> X;        // length steps+1
  std::vector<Eigen::VectorXd> z2;       // length steps+1 (exact lifted block)
  std::vector<Eigen::VectorXd> U;        // length steps
  std::vector<double> utility_predicted; // length steps
  std::vector<double> utility_realized;  // length steps: omega' z2(k+1)
  std::vector<double> eps_norm;          // length steps
  int reset_count = 0;
  bool diverged = false;
  int steps_completed = 0;
  Eigen::VectorXd initial_goal_distance;  // per robot
  Eigen::VectorXd final_goal_distance;    // per robot
  double cumulative_utility = 0.0;
};

// Runs the loop with a fixed identified model. eps_norm holds the one-step
// prediction residual against the exact lifting.
ClosedLoopRecord closed_loop_run(const RobotSystem& sys, const UtilityBank& bank,
                                 const Eigen::VectorXd& weights,
                                 const KoopmanModel& model, const Eigen::VectorXd& X0,
                                 int steps, const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper);

// Adaptive loop: at each step the estimator absorbs the previous transition
// before the control is computed. Aborts with a diagnostic record if the
// estimate turns non-finite. The log, when given, collects the estimator
// series.
ClosedLoopRecord closed_loop_run(const RobotSystem& sys, const UtilityBank& bank,
                                 const Eigen::VectorXd& weights,
                                 AdaptiveController& controller,
                                 const Eigen::VectorXd& X0, int steps,
                                 const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper, RlsLog* log = nullptr);

}  // namespace koop
