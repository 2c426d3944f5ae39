#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "koop/excitation.hpp"
#include "koop/model.hpp"
#include "koop/rls.hpp"
#include "koop/trajectory.hpp"

namespace koop {

// Free-run rollout of an approximate model: z1 propagated by the exact
// (A, B), the lifted block propagated by the model fed its own previous
// output.
struct RolloutResult {
  Eigen::MatrixXd z2_hat;  // (steps_completed + 1) x n2, initial state first
  bool diverged = false;
  int steps_completed = 0;
};

RolloutResult rollout_approx_model(const KoopmanModel& model,
                                   const Eigen::VectorXd& z1_0,
                                   const Eigen::VectorXd& z2hat_0,
                                   const std::vector<Eigen::VectorXd>& inputs,
                                   const RobotSystem& sys);

struct SeriesAggregate {
  Eigen::VectorXd rmse_per_obs;    // column-wise over time
  Eigen::VectorXd maxabs_per_obs;
  double rms = 0.0;     // over all entries
  double maxabs = 0.0;
};

SeriesAggregate aggregate_series(const Eigen::MatrixXd& series);

// The four error signals of the identification protocol, one row per step:
//   eps         a priori estimation error (adaptive runs; for a fixed model
//               it coincides with -eta_hat by definition)
//   eps_a       a posteriori estimation error (empty without an adaptive log)
//   neg_eta_hat realized modeling error of the given fixed parameters, with
//               the exact lifted state on both sides
//   z_tilde     free-run validation error, rollout minus exact
struct ValidationReport {
  Eigen::MatrixXd eps;
  Eigen::MatrixXd eps_a;
  Eigen::MatrixXd neg_eta_hat;
  Eigen::MatrixXd z_tilde;
  SeriesAggregate eps_agg;
  SeriesAggregate eps_a_agg;
  SeriesAggregate neg_eta_agg;
  SeriesAggregate z_tilde_agg;
  int horizon = 0;
  bool rollout_diverged = false;
};

ValidationReport validation_errors(const KoopmanModel& fixed_model,
                                   const std::vector<LiftedSample>& exact,
                                   const RolloutResult& rollout,
                                   const RlsLog* adaptive_log = nullptr);

// Protocol driver: fresh test trajectories from seeds disjoint from the
// training seed, one fixed-model report per test signal.
struct ValidateSpec {
  std::uint64_t training_seed = 0;
  std::vector<std::uint64_t> test_seeds = {101, 102, 103, 104, 105};
  int horizon = 200;
  ExcitationSpec excitation;  // template; seed and horizon set per test
  Eigen::VectorXd X0;
};

struct ValidationSummary {
  std::vector<std::uint64_t> seeds;
  std::vector<ValidationReport> per_seed;
  SeriesAggregate pooled_one_step;  // -eta_hat over all seeds
  SeriesAggregate pooled_free_run;  // z_tilde over all seeds
};

ValidationSummary validate(const KoopmanModel& model, const RobotSystem& sys,
                           const ObservableSet& obs, const ValidateSpec& spec);

}  // namespace koop
