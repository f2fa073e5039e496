#include "gpsaf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gpsaf/errors.hpp"

namespace gpsaf {

double kendall_tau_distance(std::span<const double> pred,
                            std::span<const double> truth) {
  const std::size_t n = pred.size();
  if (n != truth.size())
    throw ContractError("kendall_tau_distance: length mismatch");
  if (n < 2) throw NumericError("kendall_tau_distance: needs at least 2 values");
  double discordant = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dp = pred[i] - pred[j];
      const double dt = truth[i] - truth[j];
      if (dp == 0.0 || dt == 0.0)
        discordant += 0.5;
      else if ((dp < 0.0) != (dt < 0.0))
        discordant += 1.0;
    }
  }
  return discordant / (static_cast<double>(n) * (n - 1) / 2.0);
}

ErrorEstimate::ErrorEstimate(int n_functions) {
  if (n_functions < 0) throw ContractError("ErrorEstimate: negative size");
  mae_.resize(static_cast<std::size_t>(n_functions));
  tau_.resize(static_cast<std::size_t>(n_functions));
}

void ErrorEstimate::push_mae(std::span<const double> per_function_mae) {
  if (per_function_mae.size() != mae_.size())
    throw ContractError("ErrorEstimate: mae size mismatch");
  for (std::size_t i = 0; i < mae_.size(); ++i) {
    if (!(per_function_mae[i] >= 0.0))
      throw NumericError("ErrorEstimate: negative or NaN error");
    mae_[i].push_back(per_function_mae[i]);
    if (mae_[i].size() > kWindow) mae_[i].pop_front();
  }
}

void ErrorEstimate::push_tau(std::span<const double> per_function_tau) {
  if (per_function_tau.size() != tau_.size())
    throw ContractError("ErrorEstimate: tau size mismatch");
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    tau_[i].push_back(per_function_tau[i]);
    if (tau_[i].size() > kWindow) tau_[i].pop_front();
  }
}

double ErrorEstimate::value(int function) const {
  const auto& w = mae_.at(static_cast<std::size_t>(function));
  if (w.empty()) return 0.0;
  return std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
}

std::vector<double> ErrorEstimate::values() const {
  std::vector<double> out(mae_.size());
  for (std::size_t i = 0; i < mae_.size(); ++i) out[i] = value(static_cast<int>(i));
  return out;
}

std::vector<double> ErrorEstimate::tau_values() const {
  std::vector<double> out(tau_.size(), 0.0);
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    if (tau_[i].empty()) continue;
    out[i] = std::accumulate(tau_[i].begin(), tau_[i].end(), 0.0) /
             static_cast<double>(tau_[i].size());
  }
  return out;
}

void update_error(ErrorEstimate& estimate,
                  std::span<const std::vector<double>> true_f,
                  std::span<const std::vector<double>> true_g,
                  std::span<const std::vector<double>> pred_f,
                  std::span<const std::vector<double>> pred_g) {
  const std::size_t batch = true_f.size();
  if (batch == 0) throw ContractError("update_error: empty batch");
  if (pred_f.size() != batch || true_g.size() != batch || pred_g.size() != batch)
    throw ContractError("update_error: misaligned batches");
  const std::size_t n_obj = true_f[0].size();
  const std::size_t n_constr = true_g[0].size();
  if (static_cast<std::size_t>(estimate.n_functions()) != n_obj + n_constr)
    throw ContractError("update_error: function count mismatch");

  const auto column = [&](std::span<const std::vector<double>> rows,
                          std::size_t c) {
    std::vector<double> col(batch);
    for (std::size_t r = 0; r < batch; ++r) col[r] = rows[r][c];
    return col;
  };

  std::vector<double> mae(n_obj + n_constr, 0.0);
  std::vector<double> tau(n_obj + n_constr, 0.0);
  for (std::size_t fn = 0; fn < n_obj + n_constr; ++fn) {
    const bool is_obj = fn < n_obj;
    const auto truth = column(is_obj ? true_f : true_g, is_obj ? fn : fn - n_obj);
    const auto pred = column(is_obj ? pred_f : pred_g, is_obj ? fn : fn - n_obj);
    double worst = 0.0;
    for (std::size_t r = 0; r < batch; ++r)
      worst = std::max(worst, std::abs(truth[r] - pred[r]));
    mae[fn] = worst;
    if (batch >= 2) tau[fn] = kendall_tau_distance(pred, truth);
  }
  estimate.push_mae(mae);
  if (batch >= 2) estimate.push_tau(tau);
}

}  // namespace gpsaf
