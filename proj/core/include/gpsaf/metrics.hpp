#pragma once

#include <deque>
#include <span>
#include <vector>

namespace gpsaf {

/// Normalized Kendall tau distance between the rankings induced by two value
/// vectors: discordant pairs / (n(n-1)/2), where a pair tied in either vector
/// counts as half a discordance. Requires n >= 2.
double kendall_tau_distance(std::span<const double> pred,
                            std::span<const double> truth);

/// Per-function surrogate prediction-error tracker. Each function keeps a
/// moving window (five iterations) of maximum absolute errors; the smoothed
/// value e_i is the arithmetic mean of the window and scales the PKT noise.
/// A matching Kendall-tau-distance window is kept for diagnostics.
class ErrorEstimate {
 public:
  explicit ErrorEstimate(int n_functions);

  int n_functions() const { return static_cast<int>(mae_.size()); }
  bool seeded() const { return !mae_.empty() && !mae_[0].empty(); }

  /// Appends one iteration's per-function maximum absolute error, dropping
  /// entries older than five iterations.
  void push_mae(std::span<const double> per_function_mae);
  void push_tau(std::span<const double> per_function_tau);

  /// Smoothed error e_i for function i (objectives first, then constraints).
  double value(int function) const;
  std::vector<double> values() const;
  std::vector<double> tau_values() const;

  static constexpr int kWindow = 5;

 private:
  std::vector<std::deque<double>> mae_;
  std::vector<std::deque<double>> tau_;
};

/// Pushes one evaluated batch into the tracker: per function, the maximum
/// absolute prediction error across the batch; the Kendall window is updated
/// only when the batch has at least two solutions. Rows are solutions,
/// columns are functions (objectives in *_f, constraints in *_g).
void update_error(ErrorEstimate& estimate,
                  std::span<const std::vector<double>> true_f,
                  std::span<const std::vector<double>> true_g,
                  std::span<const std::vector<double>> pred_f,
                  std::span<const std::vector<double>> pred_g);

}  // namespace gpsaf
