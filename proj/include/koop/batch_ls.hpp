#pragma once

#include <Eigen/Dense>
#include <vector>

#include "koop/regressor.hpp"

namespace koop {

// Least-squares estimate of Theta over stacked samples: minimizes
// sum_k |Theta' zeta(k) - y(k)|^2. When the regressor Gram matrix is
// singular the minimum-norm solution is returned, which keeps repeated runs
// reproducible where the normal equations alone would not pin a solution.
Eigen::MatrixXd batch_least_squares(const std::vector<RegressorSample>& samples);

}  // namespace koop
