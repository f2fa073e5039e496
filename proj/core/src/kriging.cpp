#include "gpsaf/kriging.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

constexpr double kFailurePenalty = 1e30;

/// Nelder-Mead with clamped coordinates and a hard evaluation budget.
/// Returns the best point visited.
std::pair<Eigen::VectorXd, double> nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& fn,
    Eigen::VectorXd start, double lo, double hi, int max_evals) {
  const auto dim = start.size();
  const auto clamp = [&](Eigen::VectorXd v) {
    return v.cwiseMax(lo).cwiseMin(hi);
  };
  int evals = 0;
  const auto eval = [&](const Eigen::VectorXd& v) {
    ++evals;
    return fn(v);
  };

  std::vector<Eigen::VectorXd> simplex;
  std::vector<double> value;
  simplex.push_back(clamp(start));
  value.push_back(eval(simplex[0]));
  for (Eigen::Index d = 0; d < dim && evals < max_evals; ++d) {
    Eigen::VectorXd v = simplex[0];
    v(d) += 0.5;
    simplex.push_back(clamp(v));
    value.push_back(eval(simplex.back()));
  }

  std::vector<std::size_t> order(simplex.size());
  const auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
  };

  while (evals < max_evals && simplex.size() == static_cast<std::size_t>(dim) + 1) {
    sort_simplex();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];
    if (std::abs(value[worst] - value[best]) <=
        1e-8 * (1.0 + std::abs(value[best])))
      break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (const std::size_t i : order)
      if (i != worst) centroid += simplex[i];
    centroid /= static_cast<double>(dim);

    const Eigen::VectorXd reflected = clamp(centroid + (centroid - simplex[worst]));
    const double fr = eval(reflected);
    if (fr < value[best]) {
      const Eigen::VectorXd expanded =
          clamp(centroid + 2.0 * (centroid - simplex[worst]));
      const double fe = evals < max_evals ? eval(expanded) : fr;
      if (fe < fr) {
        simplex[worst] = expanded;
        value[worst] = fe;
      } else {
        simplex[worst] = reflected;
        value[worst] = fr;
      }
    } else if (fr < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = fr;
    } else {
      const Eigen::VectorXd contracted =
          clamp(centroid + 0.5 * (simplex[worst] - centroid));
      const double fc = evals < max_evals ? eval(contracted) : fr;
      if (fc < value[worst]) {
        simplex[worst] = contracted;
        value[worst] = fc;
      } else {
        for (const std::size_t i : order) {
          if (i == best || evals >= max_evals) continue;
          simplex[i] = clamp(simplex[best] + 0.5 * (simplex[i] - simplex[best]));
          value[i] = eval(simplex[i]);
        }
      }
    }
  }

  sort_simplex();
  return {simplex[order.front()], value[order.front()]};
}

}  // namespace

KrigingModel::KrigingModel(KrigingConfig config) : config_(config) {
  if (config_.nugget < 0.0) throw ConfigError("kriging: negative nugget");
  if (config_.n_starts < 1) throw ConfigError("kriging: n_starts < 1");
}

void KrigingModel::fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = X.rows();
  const auto dim = X.cols();
  if (n != y.size()) throw ContractError("kriging: X/y size mismatch");
  if (n < 2) throw FitError("kriging: needs at least two training points");

  y_mean_ = config_.standardize_output ? y.mean() : 0.0;
  double sd = 1.0;
  if (config_.standardize_output) {
    sd = std::sqrt((y.array() - y_mean_).square().sum() /
                   static_cast<double>(n - 1));
    if (!(sd > 1e-300)) sd = 1.0;
  }
  y_scale_ = sd;
  const Eigen::VectorXd ys = (y.array() - y_mean_) / y_scale_;

  // Per-dimension squared differences, computed once so every likelihood
  // evaluation is a weighted sum plus one exp over the matrix.
  std::vector<Eigen::MatrixXd> d2(static_cast<std::size_t>(dim));
  for (Eigen::Index d = 0; d < dim; ++d) {
    const Eigen::VectorXd col = X.col(d);
    d2[static_cast<std::size_t>(d)] =
        (col.replicate(1, n) - col.transpose().replicate(n, 1)).array().square();
  }

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::MatrixXd R(n, n);

  const auto build_correlation = [&](const Eigen::VectorXd& log10_theta) {
    R.setZero();
    for (Eigen::Index d = 0; d < dim; ++d)
      R += std::pow(10.0, log10_theta(d)) * d2[static_cast<std::size_t>(d)];
    R = (-R.array()).exp().matrix();
    R.diagonal().array() += config_.nugget;
  };

  // Concentrated negative log-likelihood: n log sigma^2 + log det R.
  const auto nll = [&](const Eigen::VectorXd& log10_theta) {
    build_correlation(log10_theta);
    llt.compute(R);
    if (llt.info() != Eigen::Success) return kFailurePenalty;
    const Eigen::VectorXd ri_one = llt.solve(ones);
    const Eigen::VectorXd ri_y = llt.solve(ys);
    const double beta = ones.dot(ri_y) / ones.dot(ri_one);
    const Eigen::VectorXd res = ys - beta * ones;
    const double sigma2 = res.dot(llt.solve(res)) / static_cast<double>(n);
    const double log_det =
        2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double v = static_cast<double>(n) * std::log(std::max(sigma2, 1e-300)) +
                     log_det;
    return std::isfinite(v) ? v : kFailurePenalty;
  };

  std::vector<Eigen::VectorXd> starts;
  if (warm_log_theta_ && warm_log_theta_->size() == dim)
    starts.push_back(*warm_log_theta_);
  for (const double iso : {0.0, -1.0, 1.0}) {
    if (static_cast<int>(starts.size()) >= config_.n_starts) break;
    starts.push_back(Eigen::VectorXd::Constant(dim, iso));
  }

  Eigen::VectorXd best_t;
  double best_v = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    auto [t, v] = nelder_mead(nll, s, config_.log10_theta_lo,
                              config_.log10_theta_hi,
                              config_.max_evals_per_start);
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  if (!(best_v < kFailurePenalty))
    throw FitError("kriging: correlation matrix not positive definite");

  build_correlation(best_t);
  llt.compute(R);
  if (llt.info() != Eigen::Success)
    throw FitError("kriging: final factorization failed");
  const Eigen::VectorXd ri_one = llt.solve(ones);
  const Eigen::VectorXd ri_y = llt.solve(ys);
  beta_ = ones.dot(ri_y) / ones.dot(ri_one);
  alpha_ = llt.solve(ys - beta_ * ones);
  if (!alpha_.allFinite()) throw FitError("kriging: non-finite coefficients");

  train_ = X;
  theta_ = best_t.unaryExpr([](double t) { return std::pow(10.0, t); });
  warm_log_theta_ = best_t;
  fitted_ = true;
}

Eigen::VectorXd KrigingModel::predict(const Eigen::MatrixXd& X) const {
  if (!fitted_) throw StateError("kriging: predict before fit");
  const auto n = train_.rows();
  Eigen::VectorXd out(X.rows());
  Eigen::VectorXd r(n);
  for (Eigen::Index q = 0; q < X.rows(); ++q) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double s = 0.0;
      for (Eigen::Index d = 0; d < train_.cols(); ++d) {
        const double diff = X(q, d) - train_(i, d);
        s += theta_(d) * diff * diff;
      }
      r(i) = std::exp(-s);
    }
    out(q) = y_mean_ + y_scale_ * (beta_ + r.dot(alpha_));
  }
  return out;
}

}  // namespace gpsaf
