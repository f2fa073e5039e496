#pragma once

#include <Eigen/Dense>
#include <optional>

namespace gpsaf {

struct KrigingConfig {
  double nugget = 1e-10;
  double log10_theta_lo = -3.0;  // theta searched in [1e-3, 1e3], log scale
  double log10_theta_hi = 3.0;
  int n_starts = 3;
  int max_evals_per_start = 35;
  bool standardize_output = false;
};

/// Ordinary Kriging: constant mean, anisotropic Gaussian correlation
/// exp(-sum_d theta_d (x_d - x'_d)^2). The per-dimension theta vector is
/// tuned by multi-start bounded Nelder-Mead on the concentrated
/// log-likelihood; a refit warm-starts from the previous optimum.
class KrigingModel {
 public:
  explicit KrigingModel(KrigingConfig config = {});

  void fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;

  bool fitted() const { return fitted_; }
  const Eigen::VectorXd& theta() const { return theta_; }

 private:
  KrigingConfig config_;
  bool fitted_ = false;
  Eigen::MatrixXd train_;
  Eigen::VectorXd theta_;
  Eigen::VectorXd alpha_;  // R^{-1} (y - beta 1)
  double beta_ = 0.0;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  std::optional<Eigen::VectorXd> warm_log_theta_;
};

}  // namespace gpsaf
