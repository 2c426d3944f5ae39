#include "koop/validation.hpp"

#include <algorithm>
#include <cmath>

namespace koop {

RolloutResult rollout_approx_model(const KoopmanModel& model,
                                   const Eigen::VectorXd& z1_0,
                                   const Eigen::VectorXd& z2hat_0,
                                   const std::vector<Eigen::VectorXd>& inputs,
                                   const RobotSystem& sys) {
  const ModelDims d = model_dims(model);
  if (z1_0.size() != d.n1 || z2hat_0.size() != d.n2 || d.n1 != sys.state_dim()) {
    throw ConfigError("rollout: initial state does not match model/system dimensions");
  }
  RolloutResult result;
  result.z2_hat.resize(static_cast<Eigen::Index>(inputs.size()) + 1, d.n2);
  result.z2_hat.row(0) = z2hat_0.transpose();

  Eigen::VectorXd z1 = z1_0;
  Eigen::VectorXd z2_hat = z2hat_0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    Eigen::VectorXd next = predict(model, z1, z2_hat, inputs[k]);
    if (!next.allFinite()) {
      result.diverged = true;
      result.z2_hat.conservativeResize(static_cast<Eigen::Index>(k) + 1, d.n2);
      return result;
    }
    z2_hat = std::move(next);
    z1 = step(sys, z1, inputs[k]);
    result.z2_hat.row(static_cast<Eigen::Index>(k) + 1) = z2_hat.transpose();
    result.steps_completed = static_cast<int>(k) + 1;
  }
  return result;
}

SeriesAggregate aggregate_series(const Eigen::MatrixXd& series) {
  SeriesAggregate agg;
  if (series.rows() == 0 || series.cols() == 0) {
    agg.rmse_per_obs = Eigen::VectorXd::Zero(series.cols());
    agg.maxabs_per_obs = Eigen::VectorXd::Zero(series.cols());
    return agg;
  }
  agg.rmse_per_obs =
      (series.array().square().colwise().mean()).sqrt().matrix().transpose();
  agg.maxabs_per_obs = series.cwiseAbs().colwise().maxCoeff().transpose();
  agg.rms = std::sqrt(series.array().square().mean());
  agg.maxabs = series.cwiseAbs().maxCoeff();
  return agg;
}

ValidationReport validation_errors(const KoopmanModel& fixed_model,
                                   const std::vector<LiftedSample>& exact,
                                   const RolloutResult& rollout,
                                   const RlsLog* adaptive_log) {
  const ModelDims d = model_dims(fixed_model);
  const int T = static_cast<int>(exact.size());
  if (rollout.steps_completed < T && !rollout.diverged) {
    throw ConfigError("validation_errors: rollout shorter than the exact horizon");
  }
  if (adaptive_log && adaptive_log->size() < T) {
    throw ConfigError("validation_errors: adaptive log shorter than the horizon");
  }

  ValidationReport report;
  report.horizon = T;
  report.rollout_diverged = rollout.diverged;
  const int Tr = std::min(T, rollout.steps_completed);

  report.neg_eta_hat.resize(T, d.n2);
  report.z_tilde.resize(Tr, d.n2);
  report.eps.resize(T, d.n2);
  if (adaptive_log) report.eps_a.resize(T, d.n2);

  for (int k = 0; k < T; ++k) {
    const LiftedSample& s = exact[static_cast<std::size_t>(k)];
    const Eigen::VectorXd prediction =
        predict(fixed_model, s.z.z1, s.z.lifted(), s.u);
    const Eigen::VectorXd neg_eta = prediction - s.z_next.lifted();
    report.neg_eta_hat.row(k) = neg_eta.transpose();
    if (adaptive_log) {
      report.eps.row(k) = adaptive_log->eps[static_cast<std::size_t>(k)].transpose();
      report.eps_a.row(k) = adaptive_log->eps_a[static_cast<std::size_t>(k)].transpose();
    } else {
      // With fixed parameters the a priori error and the realized modeling
      // error are the same formula.
      report.eps.row(k) = neg_eta.transpose();
    }
    if (k < Tr) {
      report.z_tilde.row(k) =
          rollout.z2_hat.row(k + 1) - s.z_next.lifted().transpose();
    }
  }

  report.eps_agg = aggregate_series(report.eps);
  report.eps_a_agg = aggregate_series(report.eps_a);
  report.neg_eta_agg = aggregate_series(report.neg_eta_hat);
  report.z_tilde_agg = aggregate_series(report.z_tilde);
  return report;
}

ValidationSummary validate(const KoopmanModel& model, const RobotSystem& sys,
                           const ObservableSet& obs, const ValidateSpec& spec) {
  for (std::uint64_t seed : spec.test_seeds) {
    if (seed == spec.training_seed) {
      throw ConfigError("validate: test seed " + std::to_string(seed) +
                        " equals the training seed; validation requires signals "
                        "different from those used for identification");
    }
  }
  if (spec.horizon < 0) throw ConfigError("validate: negative horizon");
  if (spec.X0.size() != sys.state_dim()) {
    throw ConfigError("validate: X0 does not match the system dimension");
  }

  ValidationSummary summary;
  summary.seeds = spec.test_seeds;
  Eigen::MatrixXd pooled_one_step(0, 0), pooled_free_run(0, 0);
  for (std::uint64_t seed : spec.test_seeds) {
    ExcitationSpec exc = spec.excitation;
    exc.seed = seed;
    exc.horizon = spec.horizon;
    const auto inputs = excitation_signal(exc);
    const auto exact = generate_trajectory(sys, obs, spec.X0, inputs);

    Eigen::VectorXd z2_0 = exact.empty() ? obs.evaluate(spec.X0) : exact[0].z.lifted();
    const RolloutResult rollout =
        rollout_approx_model(model, spec.X0, z2_0, inputs, sys);
    ValidationReport report = validation_errors(model, exact, rollout);

    const auto append = [](Eigen::MatrixXd& pool, const Eigen::MatrixXd& block) {
      if (block.rows() == 0) return;
      if (pool.rows() == 0) {
        pool = block;
      } else {
        const Eigen::Index rows = pool.rows();
        pool.conservativeResize(rows + block.rows(), block.cols());
        pool.bottomRows(block.rows()) = block;
      }
    };
    append(pooled_one_step, report.neg_eta_hat);
    append(pooled_free_run, report.z_tilde);
    summary.per_seed.push_back(std::move(report));
  }
  summary.pooled_one_step = aggregate_series(pooled_one_step);
  summary.pooled_free_run = aggregate_series(pooled_free_run);
  return summary;
}

}  // namespace koop
