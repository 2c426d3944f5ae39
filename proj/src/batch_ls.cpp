#include "koop/batch_ls.hpp"

namespace koop {

Eigen::MatrixXd batch_least_squares(const std::vector<RegressorSample>& samples) {
  if (samples.empty()) throw ConfigError("batch_least_squares: no samples");
  const Eigen::Index d = samples.front().zeta.size();
  const Eigen::Index ny = samples.front().y.size();
  Eigen::MatrixXd Z(static_cast<Eigen::Index>(samples.size()), d);
  Eigen::MatrixXd Y(static_cast<Eigen::Index>(samples.size()), ny);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    if (s.zeta.size() != d || s.y.size() != ny) {
      throw ConfigError("batch_least_squares: sample " + std::to_string(k) +
                        " has inconsistent dimensions");
    }
    Z.row(static_cast<Eigen::Index>(k)) = s.zeta.transpose();
    Y.row(static_cast<Eigen::Index>(k)) = s.y.transpose();
  }
  // Complete orthogonal decomposition yields the minimum-norm least-squares
  // solution for rank-deficient Z.
  return Z.completeOrthogonalDecomposition().solve(Y);
}

}  // namespace koop
