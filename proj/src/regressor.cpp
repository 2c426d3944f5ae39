#include "koop/regressor.hpp"

namespace koop {

Eigen::VectorXd symmetric_products(const Eigen::VectorXd& dz) {
  const int n = static_cast<int>(dz.size());
  Eigen::VectorXd g(BilinearLayout::sym_size(n));
  int idx = 0;
  for (int p = 0; p < n; ++p) {
    g(idx++) = 0.5 * dz(p) * dz(p);
    for (int q = p + 1; q < n; ++q) g(idx++) = dz(p) * dz(q);
  }
  return g;
}

Eigen::VectorXd kron_products(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Eigen::VectorXd linear_regressor_vector(const Eigen::VectorXd& z1,
                                        const Eigen::VectorXd& z2,
                                        const Eigen::VectorXd& U) {
  Eigen::VectorXd zeta(z1.size() + z2.size() + U.size());
  zeta << z1, z2, U;
  return zeta;
}

Eigen::VectorXd bilinear_regressor_vector(const Eigen::VectorXd& z1,
                                          const Eigen::VectorXd& z2,
                                          const Eigen::VectorXd& U,
                                          const OperatingPoint& x0) {
  if (z1.size() != x0.z1.size() || z2.size() != x0.z2.size()) {
    throw ConfigError("bilinear regressor: state does not match operating point, (" +
                      std::to_string(z1.size()) + ", " + std::to_string(z2.size()) +
                      ") vs (" + std::to_string(x0.z1.size()) + ", " +
                      std::to_string(x0.z2.size()) + ")");
  }
  const Eigen::VectorXd dz1 = z1 - x0.z1;
  const Eigen::VectorXd dz2 = z2 - x0.z2;
  const BilinearLayout l = BilinearLayout::make(
      static_cast<int>(dz1.size()), static_cast<int>(dz2.size()),
      static_cast<int>(U.size()));
  Eigen::VectorXd zeta(l.total);
  zeta.segment(l.off_dz1, l.n1) = dz1;
  zeta.segment(l.off_dz2, l.n2) = dz2;
  zeta.segment(l.off_u, l.m) = U;
  zeta(l.off_one) = 1.0;
  zeta.segment(l.off_g1, l.size_g1) = symmetric_products(dz1);
  zeta.segment(l.off_g2, l.size_g2) = kron_products(dz2, dz1);
  zeta.segment(l.off_g3, l.size_g3) = symmetric_products(dz2);
  zeta.segment(l.off_g4, l.size_g4) = kron_products(dz1, U);
  zeta.segment(l.off_g5, l.size_g5) = kron_products(dz2, U);
  return zeta;
}

RegressorSample build_linear_regressor(const LiftedSample& sample) {
  return {linear_regressor_vector(sample.z.z1, sample.z.lifted(), sample.u),
          sample.z_next.lifted()};
}

RegressorSample build_bilinear_regressor(const LiftedSample& sample,
                                         const OperatingPoint& x0) {
  return {bilinear_regressor_vector(sample.z.z1, sample.z.lifted(), sample.u, x0),
          sample.z_next.lifted()};
}

}  // namespace koop
