#include "koop/model.hpp"

#include "koop/regressor.hpp"

namespace koop {

std::string to_string(ModelKind kind) {
  return kind == ModelKind::Linear ? "linear" : "bilinear";
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "linear") return ModelKind::Linear;
  if (s == "bilinear") return ModelKind::Bilinear;
  throw ConfigError("unknown model kind '" + s + "'");
}

BilinearLayout BilinearLayout::make(int n1, int n2, int m) {
  BilinearLayout l;
  l.n1 = n1;
  l.n2 = n2;
  l.m = m;
  l.size_g1 = sym_size(n1);
  l.size_g2 = n2 * n1;
  l.size_g3 = sym_size(n2);
  l.size_g4 = n1 * m;
  l.size_g5 = n2 * m;
  l.off_dz1 = 0;
  l.off_dz2 = l.off_dz1 + n1;
  l.off_u = l.off_dz2 + n2;
  l.off_one = l.off_u + m;
  l.off_g1 = l.off_one + 1;
  l.off_g2 = l.off_g1 + l.size_g1;
  l.off_g3 = l.off_g2 + l.size_g2;
  l.off_g4 = l.off_g3 + l.size_g3;
  l.off_g5 = l.off_g4 + l.size_g4;
  l.total = l.off_g5 + l.size_g5;
  return l;
}

int BilinearLayout::sym_index(int n, int p, int q) {
  // (p, q) with p <= q, enumerated row-major over the upper triangle.
  return p * n - p * (p - 1) / 2 + (q - p);
}

namespace {

// Rebuilds a symmetric matrix from an upper-triangular packed column.
Eigen::MatrixXd unpack_symmetric(const Eigen::VectorXd& packed, int n) {
  Eigen::MatrixXd H(n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      const double v = packed(BilinearLayout::sym_index(n, p, q));
      H(p, q) = v;
      H(q, p) = v;
    }
  }
  return H;
}

}  // namespace

Eigen::MatrixXd BilinearKoopmanModel::H11(int i) const {
  return unpack_symmetric(Phi1.col(i), dims().n1);
}

Eigen::MatrixXd BilinearKoopmanModel::H22(int i) const {
  return unpack_symmetric(Phi3.col(i), dims().n2);
}

Eigen::MatrixXd BilinearKoopmanModel::H21(int i) const {
  const ModelDims d = dims();
  Eigen::MatrixXd H(d.n2, d.n1);
  for (int a = 0; a < d.n2; ++a) {
    for (int b = 0; b < d.n1; ++b) H(a, b) = Phi2(a * d.n1 + b, i);
  }
  return H;
}

Eigen::MatrixXd BilinearKoopmanModel::H13(int i) const {
  const ModelDims d = dims();
  Eigen::MatrixXd H(d.n1, d.m);
  for (int p = 0; p < d.n1; ++p) {
    for (int c = 0; c < d.m; ++c) H(p, c) = Phi4(p * d.m + c, i);
  }
  return H;
}

Eigen::MatrixXd BilinearKoopmanModel::H23(int i) const {
  const ModelDims d = dims();
  Eigen::MatrixXd H(d.n2, d.m);
  for (int a = 0; a < d.n2; ++a) {
    for (int c = 0; c < d.m; ++c) H(a, c) = Phi5(a * d.m + c, i);
  }
  return H;
}

Eigen::MatrixXd BilinearKoopmanModel::pack_theta() const {
  const BilinearLayout l = layout();
  Eigen::MatrixXd theta(l.total, l.n2);
  theta.middleRows(l.off_dz1, l.n1) = A21.transpose();
  theta.middleRows(l.off_dz2, l.n2) = A22.transpose();
  theta.middleRows(l.off_u, l.m) = B2.transpose();
  theta.row(l.off_one) = f0.transpose();
  theta.middleRows(l.off_g1, l.size_g1) = Phi1;
  theta.middleRows(l.off_g2, l.size_g2) = Phi2;
  theta.middleRows(l.off_g3, l.size_g3) = Phi3;
  theta.middleRows(l.off_g4, l.size_g4) = Phi4;
  theta.middleRows(l.off_g5, l.size_g5) = Phi5;
  return theta;
}

BilinearKoopmanModel BilinearKoopmanModel::unpack_theta(const Eigen::MatrixXd& theta,
                                                        OperatingPoint x0,
                                                        const ModelDims& dims) {
  const BilinearLayout l = BilinearLayout::make(dims.n1, dims.n2, dims.m);
  if (theta.rows() != l.total || theta.cols() != dims.n2) {
    throw ConfigError("unpack_theta: parameter matrix is " +
                      std::to_string(theta.rows()) + "x" + std::to_string(theta.cols()) +
                      ", layout expects " + std::to_string(l.total) + "x" +
                      std::to_string(dims.n2));
  }
  BilinearKoopmanModel model;
  model.A21 = theta.middleRows(l.off_dz1, l.n1).transpose();
  model.A22 = theta.middleRows(l.off_dz2, l.n2).transpose();
  model.B2 = theta.middleRows(l.off_u, l.m).transpose();
  model.f0 = theta.row(l.off_one).transpose();
  model.Phi1 = theta.middleRows(l.off_g1, l.size_g1);
  model.Phi2 = theta.middleRows(l.off_g2, l.size_g2);
  model.Phi3 = theta.middleRows(l.off_g3, l.size_g3);
  model.Phi4 = theta.middleRows(l.off_g4, l.size_g4);
  model.Phi5 = theta.middleRows(l.off_g5, l.size_g5);
  model.x0 = std::move(x0);
  return model;
}

BilinearKoopmanModel BilinearKoopmanModel::zero(const ModelDims& dims,
                                                OperatingPoint x0) {
  const BilinearLayout l = BilinearLayout::make(dims.n1, dims.n2, dims.m);
  return unpack_theta(Eigen::MatrixXd::Zero(l.total, dims.n2), std::move(x0), dims);
}

Eigen::MatrixXd linear_to_theta(const LinearKoopmanModel& model) {
  const ModelDims d = model.dims();
  Eigen::MatrixXd theta(d.n1 + d.n2 + d.m, d.n2);
  theta.topRows(d.n1) = model.A21.transpose();
  theta.middleRows(d.n1, d.n2) = model.A22.transpose();
  theta.bottomRows(d.m) = model.B2.transpose();
  return theta;
}

LinearKoopmanModel linear_from_theta(const Eigen::MatrixXd& theta,
                                     const ModelDims& dims) {
  if (theta.rows() != dims.n1 + dims.n2 + dims.m || theta.cols() != dims.n2) {
    throw ConfigError("linear_from_theta: parameter matrix is " +
                      std::to_string(theta.rows()) + "x" + std::to_string(theta.cols()) +
                      ", dims expect " + std::to_string(dims.n1 + dims.n2 + dims.m) +
                      "x" + std::to_string(dims.n2));
  }
  LinearKoopmanModel model;
  model.A21 = theta.topRows(dims.n1).transpose();
  model.A22 = theta.middleRows(dims.n1, dims.n2).transpose();
  model.B2 = theta.bottomRows(dims.m).transpose();
  return model;
}

ModelDims model_dims(const KoopmanModel& model) {
  return std::visit([](const auto& m) { return m.dims(); }, model);
}

ModelKind model_kind(const KoopmanModel& model) {
  return std::holds_alternative<LinearKoopmanModel>(model) ? ModelKind::Linear
                                                           : ModelKind::Bilinear;
}

namespace {

void check_predict_dims(const ModelDims& d, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U) {
  if (z1.size() != d.n1 || z2.size() != d.n2 || U.size() != d.m) {
    throw ConfigError("predict: got (z1, z2, U) lengths (" + std::to_string(z1.size()) +
                      ", " + std::to_string(z2.size()) + ", " + std::to_string(U.size()) +
                      "), model expects (" + std::to_string(d.n1) + ", " +
                      std::to_string(d.n2) + ", " + std::to_string(d.m) + ")");
  }
}

}  // namespace

Eigen::VectorXd predict(const LinearKoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U) {
  check_predict_dims(model.dims(), z1, z2, U);
  return model.A21 * z1 + model.A22 * z2 + model.B2 * U;
}

Eigen::VectorXd predict(const BilinearKoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U) {
  check_predict_dims(model.dims(), z1, z2, U);
  const Eigen::VectorXd dz1 = z1 - model.x0.z1;
  const Eigen::VectorXd dz2 = z2 - model.x0.z2;
  Eigen::VectorXd out = model.A21 * dz1 + model.A22 * dz2 + model.B2 * U + model.f0;
  out.noalias() += model.Phi1.transpose() * symmetric_products(dz1);
  out.noalias() += model.Phi2.transpose() * kron_products(dz2, dz1);
  out.noalias() += model.Phi3.transpose() * symmetric_products(dz2);
  out.noalias() += model.Phi4.transpose() * kron_products(dz1, U);
  out.noalias() += model.Phi5.transpose() * kron_products(dz2, U);
  return out;
}

Eigen::VectorXd predict(const KoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U) {
  return std::visit([&](const auto& m) { return predict(m, z1, z2, U); }, model);
}

Eigen::VectorXd compute_f0_reference(const ObservableSet& obs, const RobotSystem& sys,
                                     const Eigen::VectorXd& z10) {
  const Eigen::VectorXd successor =
      step(sys, z10, Eigen::VectorXd::Zero(sys.input_dim()));
  return obs.evaluate(successor);
}

}  // namespace koop
