#include "gpsaf/rbf.hpp"

#include <cmath>

#include "gpsaf/errors.hpp"

namespace gpsaf {

RbfModel::RbfModel(RbfConfig config) : config_(config) {
  if (config_.tail_degree != 0 && config_.tail_degree != 1)
    throw ConfigError("rbf: tail degree must be 0 or 1");
  if (config_.regularization < 0.0)
    throw ConfigError("rbf: negative regularization");
}

double RbfModel::basis(double r) const {
  switch (config_.kernel) {
    case RbfKernel::kCubic:
      return r * r * r;
    case RbfKernel::kGaussian: {
      const double t = r / gaussian_scale_;
      return std::exp(-t * t);
    }
    case RbfKernel::kThinPlate:
      return r <= 0.0 ? 0.0 : r * r * std::log(r);
  }
  return 0.0;
}

void RbfModel::fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = X.rows();
  const auto dim = X.cols();
  if (n != y.size()) throw ContractError("rbf: X/y size mismatch");
  if (n < 2) throw FitError("rbf: needs at least two training points");

  if (config_.kernel == RbfKernel::kGaussian) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        total += (X.row(i) - X.row(j)).norm();
    gaussian_scale_ =
        config_.gaussian_width * total / (static_cast<double>(n) * (n - 1) / 2.0);
    if (!(gaussian_scale_ > 0.0)) gaussian_scale_ = 1.0;
  }

  const Eigen::Index tail = config_.tail_degree == 0 ? 1 : dim + 1;
  const Eigen::Index size = n + tail;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double phi = basis((X.row(i) - X.row(j)).norm());
      A(i, j) = phi;
      A(j, i) = phi;
    }
    A(i, i) += config_.regularization;
    A(i, n) = 1.0;
    A(n, i) = 1.0;
    if (config_.tail_degree == 1) {
      A.block(i, n + 1, 1, dim) = X.row(i);
      A.block(n + 1, i, dim, 1) = X.row(i).transpose();
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs.head(n) = y;

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd solution = lu.solve(rhs);
  if (!solution.allFinite()) throw FitError("rbf: singular kernel system");
  // Two rounds of iterative refinement recover the digits lost to the
  // near-singular kernel block (notably wide Gaussian kernels).
  for (int round = 0; round < 2; ++round)
    solution += lu.solve(rhs - A * solution);
  const double residual = (A * solution - rhs).cwiseAbs().maxCoeff();
  if (!solution.allFinite() ||
      residual > 1e-7 * (1.0 + y.cwiseAbs().maxCoeff()))
    throw FitError("rbf: kernel system solved inaccurately");

  centers_ = X;
  coeffs_ = solution;
  fitted_ = true;
}

Eigen::VectorXd RbfModel::predict(const Eigen::MatrixXd& X) const {
  if (!fitted_) throw StateError("rbf: predict before fit");
  const auto n = centers_.rows();
  const auto dim = centers_.cols();
  Eigen::VectorXd out(X.rows());
  for (Eigen::Index q = 0; q < X.rows(); ++q) {
    double v = coeffs_(n);  // constant tail term
    for (Eigen::Index i = 0; i < n; ++i)
      v += coeffs_(i) * basis((X.row(q) - centers_.row(i)).norm());
    if (config_.tail_degree == 1)
      v += X.row(q).dot(coeffs_.segment(n + 1, dim));
    out(q) = v;
  }
  return out;
}

}  // namespace gpsaf
