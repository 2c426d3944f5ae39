#pragma once

#include <Eigen/Dense>

#include "koop/model.hpp"
#include "koop/trajectory.hpp"

namespace koop {

// One row of the identification problem y = Theta' zeta.
struct RegressorSample {
  Eigen::VectorXd zeta;
  Eigen::VectorXd y;
};

// Packed product vector g such that, for a symmetric H stored upper-
// triangularly (one parameter per free entry), sum_idx H_packed(idx) g(idx)
// equals 0.5 dz' H dz: diagonal slots carry 0.5 dz_p^2, off-diagonal slots
// dz_p dz_q.
Eigen::VectorXd symmetric_products(const Eigen::VectorXd& dz);

// kron(a, b): entry i*len(b)+j is a_i b_j.
Eigen::VectorXd kron_products(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// zeta = [z1; z2; U] for the linear model.
Eigen::VectorXd linear_regressor_vector(const Eigen::VectorXd& z1,
                                        const Eigen::VectorXd& z2,
                                        const Eigen::VectorXd& U);

// zeta = [dz1; dz2; U; 1; g1; g2; g3; g4; g5] for the bilinear model.
Eigen::VectorXd bilinear_regressor_vector(const Eigen::VectorXd& z1,
                                          const Eigen::VectorXd& z2,
                                          const Eigen::VectorXd& U,
                                          const OperatingPoint& x0);

// y is the exact next-step lifted block in both cases.
RegressorSample build_linear_regressor(const LiftedSample& sample);
RegressorSample build_bilinear_regressor(const LiftedSample& sample,
                                         const OperatingPoint& x0);

}  // namespace koop
