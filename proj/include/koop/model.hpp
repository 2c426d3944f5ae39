#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>

#include "koop/errors.hpp"
#include "koop/observables.hpp"
#include "koop/robot_system.hpp"

namespace koop {

struct ModelDims {
  int n1 = 0;  // physical state block length (4 per robot)
  int n2 = 0;  // lifted block length
  int m = 0;   // input length (2 per robot)

  bool operator==(const ModelDims&) const = default;
};

enum class ModelKind { Linear, Bilinear };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

// z2(k+1) = A21 z1(k) + A22 z2(k) + B2 U(k).
struct LinearKoopmanModel {
  Eigen::MatrixXd A21;  // n2 x n1
  Eigen::MatrixXd A22;  // n2 x n2
  Eigen::MatrixXd B2;   // n2 x m

  ModelDims dims() const {
    return {static_cast<int>(A21.cols()), static_cast<int>(A21.rows()),
            static_cast<int>(B2.cols())};
  }
};

// Taylor point of the bilinear model; the input operating point is zero by
// construction.
struct OperatingPoint {
  Eigen::VectorXd z1;
  Eigen::VectorXd z2;
};

// Packed layout of the bilinear regressor / parameter matrix:
//   zeta = [dz1; dz2; U; 1; g1(dz1); g2(dz2,dz1); g3(dz2); g4(dz1,U); g5(dz2,U)]
// where dz = z - z0. g1/g3 enumerate upper-triangular products with the 1/2
// and symmetry factors folded so that Phi' g reproduces 0.5 dz' H dz; g2, g4
// and g5 are full Kronecker grids.
struct BilinearLayout {
  int n1 = 0, n2 = 0, m = 0;
  int off_dz1 = 0, off_dz2 = 0, off_u = 0, off_one = 0;
  int off_g1 = 0, off_g2 = 0, off_g3 = 0, off_g4 = 0, off_g5 = 0;
  int size_g1 = 0, size_g2 = 0, size_g3 = 0, size_g4 = 0, size_g5 = 0;
  int total = 0;

  static BilinearLayout make(int n1, int n2, int m);

  static int sym_size(int n) { return n * (n + 1) / 2; }
  // Index of the (p, q) entry, p <= q, in upper-triangular packing.
  static int sym_index(int n, int p, int q);
};

// Second-order model around x0 with the input-quadratic block absent, so
// predictions stay affine in U. The Phi blocks are |g_i| x n2; column i holds
// the packed Hessian blocks of output row i, one representative per symmetric
// pair.
struct BilinearKoopmanModel {
  Eigen::MatrixXd A21;  // n2 x n1, acts on dz1
  Eigen::MatrixXd A22;  // n2 x n2, acts on dz2
  Eigen::MatrixXd B2;   // n2 x m
  Eigen::VectorXd f0;   // n2, operating-point offset
  Eigen::MatrixXd Phi1, Phi2, Phi3, Phi4, Phi5;
  OperatingPoint x0;

  ModelDims dims() const {
    return {static_cast<int>(A21.cols()), static_cast<int>(A21.rows()),
            static_cast<int>(B2.cols())};
  }
  BilinearLayout layout() const {
    const ModelDims d = dims();
    return BilinearLayout::make(d.n1, d.n2, d.m);
  }

  // Symmetric Hessian blocks of output row i, reconstructed from the packing.
  Eigen::MatrixXd H11(int i) const;  // n1 x n1, symmetric
  Eigen::MatrixXd H22(int i) const;  // n2 x n2, symmetric
  Eigen::MatrixXd H21(int i) const;  // n2 x n1
  Eigen::MatrixXd H13(int i) const;  // n1 x m
  Eigen::MatrixXd H23(int i) const;  // n2 x m

  // Theta = [A21, A22, B2, f0, Phi1', ..., Phi5']' in R^{d x n2}.
  Eigen::MatrixXd pack_theta() const;
  static BilinearKoopmanModel unpack_theta(const Eigen::MatrixXd& theta,
                                           OperatingPoint x0, const ModelDims& dims);

  // All-zero model of the given dimensions around x0.
  static BilinearKoopmanModel zero(const ModelDims& dims, OperatingPoint x0);
};

Eigen::MatrixXd linear_to_theta(const LinearKoopmanModel& model);
LinearKoopmanModel linear_from_theta(const Eigen::MatrixXd& theta,
                                     const ModelDims& dims);

using KoopmanModel = std::variant<LinearKoopmanModel, BilinearKoopmanModel>;

ModelDims model_dims(const KoopmanModel& model);
ModelKind model_kind(const KoopmanModel& model);

// One-step prediction of the lifted block.
Eigen::VectorXd predict(const LinearKoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U);
Eigen::VectorXd predict(const BilinearKoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U);
Eigen::VectorXd predict(const KoopmanModel& model, const Eigen::VectorXd& z1,
                        const Eigen::VectorXd& z2, const Eigen::VectorXd& U);

// psi2(A z10): the analytic operating-point offset, usable to initialize or
// sanity-check an estimated f0.
Eigen::VectorXd compute_f0_reference(const ObservableSet& obs, const RobotSystem& sys,
                                     const Eigen::VectorXd& z10);

}  // namespace koop
