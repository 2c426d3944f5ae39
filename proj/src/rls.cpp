#include "koop/rls.hpp"

namespace koop {

ProjectionBox ProjectionBox::uniform(int rows, int cols, double lo, double hi) {
  if (!(lo <= hi)) throw ConfigError("projection: lower bound exceeds upper");
  return {Eigen::MatrixXd::Constant(rows, cols, lo),
          Eigen::MatrixXd::Constant(rows, cols, hi)};
}

void RlsLog::push(int k, const RlsStepResult& r) {
  eps.push_back(r.eps);
  eps_a.push_back(r.eps_a);
  m2.push_back(r.m2);
  lambda_min_lb.push_back(r.lambda_min_lb);
  if (r.reset) reset_steps.push_back(k);
  if (r.rejected) rejected_steps.push_back(k);
}

RlsEstimator::RlsEstimator(int regressor_dim, int output_dim, RlsOptions opts)
    : RlsEstimator(regressor_dim, output_dim, opts,
                   Eigen::MatrixXd::Zero(regressor_dim, output_dim)) {}

RlsEstimator::RlsEstimator(int regressor_dim, int output_dim, RlsOptions opts,
                           Eigen::MatrixXd theta0)
    : opts_(opts), theta_(std::move(theta0)) {
  if (regressor_dim < 1 || output_dim < 1) {
    throw ConfigError("rls: dimensions must be positive");
  }
  if (theta_.rows() != regressor_dim || theta_.cols() != output_dim) {
    throw ConfigError("rls: Theta0 is " + std::to_string(theta_.rows()) + "x" +
                      std::to_string(theta_.cols()) + ", expected " +
                      std::to_string(regressor_dim) + "x" + std::to_string(output_dim));
  }
  if (!(opts_.rho > 0.0)) throw ConfigError("rls: rho must be positive");
  if (!(opts_.p0_scale > 0.0)) throw ConfigError("rls: P0 scale must be positive");
  if (!(opts_.reset_p0 > 0.0) || !(opts_.reset_p1 >= 0.0) ||
      opts_.reset_p1 >= opts_.reset_p0) {
    throw ConfigError("rls: reset thresholds need 0 <= p1 < p0");
  }
  if (opts_.projection) {
    const auto& box = *opts_.projection;
    if (box.lower.rows() != regressor_dim || box.lower.cols() != output_dim ||
        box.upper.rows() != regressor_dim || box.upper.cols() != output_dim) {
      throw ConfigError("rls: projection box shape does not match Theta");
    }
  }
  P_ = opts_.p0_scale * Eigen::MatrixXd::Identity(regressor_dim, regressor_dim);
  anchor_ = opts_.p0_scale;
  acc_info_ = 0.0;
}

double RlsEstimator::lambda_min_lower_bound() const {
  if (anchor_ <= 0.0) return anchor_;  // numerical collapse; surface it as-is
  return 1.0 / (1.0 / anchor_ + acc_info_);
}

double RlsEstimator::lambda_min_exact() const {
  Eigen::MatrixXd sym = 0.5 * (P_ + P_.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double RlsEstimator::refresh_lambda_min() {
  const double lmin = lambda_min_exact();
  anchor_ = lmin;
  acc_info_ = 0.0;
  return lmin;
}

RlsStepResult RlsEstimator::update(const RegressorSample& sample) {
  RlsStepResult result;
  if (sample.zeta.size() != P_.rows() || sample.y.size() != theta_.cols()) {
    throw ConfigError("rls: sample dimensions (" + std::to_string(sample.zeta.size()) +
                      ", " + std::to_string(sample.y.size()) + ") do not match (" +
                      std::to_string(P_.rows()) + ", " + std::to_string(theta_.cols()) +
                      ")");
  }
  if (!sample.zeta.allFinite() || !sample.y.allFinite()) {
    result.rejected = true;
    result.eps = Eigen::VectorXd::Zero(theta_.cols());
    result.eps_a = result.eps;
    result.lambda_min_lb = lambda_min_lower_bound();
    ++steps_;
    return result;
  }

  const Eigen::VectorXd& zeta = sample.zeta;
  const Eigen::VectorXd Pz = P_ * zeta;
  result.quad_before = zeta.dot(Pz);
  result.m2 = opts_.rho + result.quad_before;
  result.eps = theta_.transpose() * zeta - sample.y;

  theta_.noalias() -= Pz * (result.eps.transpose() / result.m2);
  result.eps_a = theta_.transpose() * zeta - sample.y;

  P_.noalias() -= (Pz * Pz.transpose()) / result.m2;
  result.asymmetry = (P_ - P_.transpose()).cwiseAbs().maxCoeff();
  P_ = 0.5 * (P_ + P_.transpose()).eval();
  result.quad_after = zeta.dot(P_ * zeta);
  acc_info_ += zeta.squaredNorm() / opts_.rho;

  // Gain resetting. For small problems the exact lambda_min is evaluated
  // every step; otherwise only when the certified bound can no longer rule
  // out a crossing of p1.
  const bool exact_every_step = P_.rows() <= opts_.exact_eig_max_dim;
  if (exact_every_step) {
    result.lambda_min_exact = refresh_lambda_min();
  } else if (opts_.enable_reset && lambda_min_lower_bound() <= opts_.reset_p1) {
    result.lambda_min_exact = refresh_lambda_min();
  }
  if (opts_.enable_reset && result.lambda_min_exact &&
      *result.lambda_min_exact <= opts_.reset_p1) {
    P_ = opts_.reset_p0 * Eigen::MatrixXd::Identity(P_.rows(), P_.cols());
    anchor_ = opts_.reset_p0;
    acc_info_ = 0.0;
    result.reset = true;
    reset_steps_.push_back(steps_);
  }
  result.lambda_min_lb = lambda_min_lower_bound();

  if (opts_.projection) {
    theta_ = theta_.cwiseMax(opts_.projection->lower).cwiseMin(opts_.projection->upper);
  }

  ++steps_;
  return result;
}

}  // namespace koop
