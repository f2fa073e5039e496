#pragma once

#include <Eigen/Dense>

namespace gpsaf {

enum class RbfKernel { kCubic, kGaussian, kThinPlate };

struct RbfConfig {
  RbfKernel kernel = RbfKernel::kCubic;
  int tail_degree = 1;            // 0: constant, 1: linear polynomial tail
  double regularization = 1e-10;  // lambda on the kernel block diagonal
  // Gaussian width as a fraction of the mean pairwise training distance;
  // wider kernels interpolate badly under tiny regularization.
  double gaussian_width = 0.25;
};

/// Radial basis function interpolant with a low-order polynomial tail.
/// With regularization <= 1e-10 the model reproduces its training values
/// to high accuracy. Inputs are used as given; the caller is expected to
/// feed coordinates on a comparable (unit-box) scale.
class RbfModel {
 public:
  explicit RbfModel(RbfConfig config = {});

  /// X: one training design per row. Throws FitError when the augmented
  /// kernel system is numerically singular.
  void fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;

  bool fitted() const { return fitted_; }

 private:
  double basis(double r) const;

  RbfConfig config_;
  bool fitted_ = false;
  Eigen::MatrixXd centers_;
  Eigen::VectorXd coeffs_;      // kernel weights followed by tail coefficients
  double gaussian_scale_ = 1.0; // mean pairwise training distance
};

}  // namespace gpsaf
