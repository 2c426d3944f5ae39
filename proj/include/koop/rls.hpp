#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "koop/regressor.hpp"

namespace koop {

// Elementwise parameter intervals, same shape as Theta. Applied by clipping
// after each update.
struct ProjectionBox {
  Eigen::MatrixXd lower;
  Eigen::MatrixXd upper;

  static ProjectionBox uniform(int rows, int cols, double lo, double hi);
};

struct RlsOptions {
  double rho = 1.0;
  double p0_scale = 1e4;   // P(k0 - 1) = p0_scale * I
  double reset_p0 = 1e4;   // gain reset magnitude
  double reset_p1 = 1e-6;  // reset threshold, p1 << p0
  bool enable_reset = true;
  std::optional<ProjectionBox> projection;
  // Up to this regressor dimension the exact lambda_min(P) is computed every
  // step. Above it, a certified lower bound is maintained from the rank-one
  // information growth (P(k)^-1 = P(j)^-1 + sum zeta zeta' / rho), and the
  // exact eigensolve runs only when the bound reaches the reset threshold.
  int exact_eig_max_dim = 100;
};

struct RlsStepResult {
  Eigen::VectorXd eps;    // a priori error Theta(k)' zeta - y
  Eigen::VectorXd eps_a;  // a posteriori error Theta(k+1)' zeta - y
  double m2 = 0.0;        // rho + zeta' P zeta
  bool reset = false;
  bool rejected = false;  // non-finite sample; estimator untouched
  double quad_before = 0.0;  // zeta' P(k-1) zeta
  double quad_after = 0.0;   // zeta' P(k) zeta, recomputed from the updated P
  double asymmetry = 0.0;    // max |P - P'| of the raw update, before resymmetrization
  double lambda_min_lb = 0.0;               // certified lower bound on lambda_min(P)
  std::optional<double> lambda_min_exact;   // present when the eigensolve ran
};

// Per-run log of the estimation error series, consumed by the validation
// module and the CLI.
struct RlsLog {
  std::vector<Eigen::VectorXd> eps;
  std::vector<Eigen::VectorXd> eps_a;
  std::vector<double> m2;
  std::vector<double> lambda_min_lb;
  std::vector<int> reset_steps;
  std::vector<int> rejected_steps;

  void push(int k, const RlsStepResult& r);
  int size() const { return static_cast<int>(eps.size()); }
};

// The iterative least-squares identifier. Sequential state machine: one
// update at a time, strict sample order. May be moved between threads but
// never shared mutably.
class RlsEstimator {
 public:
  RlsEstimator(int regressor_dim, int output_dim, RlsOptions opts = {});
  RlsEstimator(int regressor_dim, int output_dim, RlsOptions opts,
               Eigen::MatrixXd theta0);

  // One iteration:
  //   eps   = Theta' zeta - y
  //   m^2   = rho + zeta' P zeta
  //   Theta <- Theta - P zeta eps' / m^2
  //   P     <- P - P zeta zeta' P / m^2
  //   eps_a = Theta' zeta - y   (updated Theta, before reset/projection)
  // then gain resetting (P <- p0 I when lambda_min(P) <= p1), then parameter
  // projection. A non-finite sample is rejected and leaves the state intact.
  RlsStepResult update(const RegressorSample& sample);

  const Eigen::MatrixXd& theta() const { return theta_; }
  const Eigen::MatrixXd& gain() const { return P_; }
  const RlsOptions& options() const { return opts_; }
  int regressor_dim() const { return static_cast<int>(P_.rows()); }
  int output_dim() const { return static_cast<int>(theta_.cols()); }
  int steps() const { return steps_; }
  const std::vector<int>& reset_steps() const { return reset_steps_; }
  bool finite() const { return theta_.allFinite() && P_.allFinite(); }

  // Certified lower bound on lambda_min(P) at the current state.
  double lambda_min_lower_bound() const;
  // Exact smallest eigenvalue of the symmetrized P (on demand).
  double lambda_min_exact() const;

 private:
  double refresh_lambda_min();  // exact eigensolve; re-anchors the bound

  RlsOptions opts_;
  Eigen::MatrixXd theta_;  // d x ny
  Eigen::MatrixXd P_;      // d x d, kept symmetric
  int steps_ = 0;
  std::vector<int> reset_steps_;
  // Bound anchor: lambda_min(P) was exactly `anchor_` when the accumulated
  // information `acc_info_` was zero; the bound is 1 / (1/anchor + acc_info).
  double anchor_ = 0.0;
  double acc_info_ = 0.0;
};

}  // namespace koop
