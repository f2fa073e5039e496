#pragma once

#include <deque>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gpsaf/kriging.hpp"
#include "gpsaf/metrics.hpp"
#include "gpsaf/rbf.hpp"
#include "gpsaf/types.hpp"

namespace gpsaf {

/// Surrogate predictions for a design batch; rows follow the design order.
struct Predictions {
  std::vector<std::vector<double>> f_hat;
  std::vector<std::vector<double>> g_hat;
};

/// One model in a function's candidate list: an RBF or Kriging variant,
/// optionally behind the PLOG transform (constraint functions only).
class CandidateModel {
 public:
  CandidateModel(std::string id, RbfConfig config, bool use_plog);
  CandidateModel(std::string id, KrigingConfig config, bool use_plog);

  /// Fits on (X, y); y passes through PLOG first when enabled.
  /// Throws FitError on numerical failure.
  void fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

  /// Predictions on the original output scale (PLOG inverted).
  Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;

  const std::string& id() const { return id_; }
  bool uses_plog() const { return plog_; }

  /// Fresh, unfitted copy with the same configuration (for cross-validation).
  CandidateModel blank_clone() const;

 private:
  std::string id_;
  bool plog_;
  std::variant<RbfModel, KrigingModel> model_;
  std::variant<RbfConfig, KrigingConfig> config_;
};

/// Independent per-function surrogates (objectives first, then constraints),
/// each function served by the best of a fixed candidate list.
///
/// Selection follows the smoothed (five-iteration window) Kendall tau
/// distance, ties broken by the smoothed maximum absolute error; a PLOG twin
/// displaces its plain counterpart only when its smoothed tau distance is
/// strictly lower. The first fit seeds all metrics with a 5-fold
/// cross-validation pass and seeds the error tracker with the selected
/// models' CV errors; later iterations update metrics from each newly
/// evaluated batch via observe().
class SurrogateEnsemble {
 public:
  explicit SurrogateEnsemble(std::shared_ptr<const Problem> problem);

  /// (Re)fits every candidate on the full archive. Requires
  /// archive.size() >= n_var + 2.
  void fit(const Archive& archive);

  /// Predictions from each function's selected model; pure.
  Predictions predict(std::span<const std::vector<double>> designs) const;

  /// Feeds a newly evaluated batch into the candidate metric windows
  /// (models still reflect the archive they were fitted on) and re-selects
  /// the per-function winners.
  void observe(std::span<const Solution> evaluated);

  bool fitted() const { return fitted_; }
  int n_functions() const { return static_cast<int>(slots_.size()); }

  ErrorEstimate& error() { return error_; }
  const ErrorEstimate& error() const { return error_; }

  /// Selected candidate id per function (diagnostics / trace output).
  std::vector<std::string> selected_ids() const;

 private:
  struct Entry {
    CandidateModel model;
    bool ok = false;  // current fit usable
    std::deque<double> tau_window;
    std::deque<double> mae_window;

    double smoothed_tau() const;
    double smoothed_mae() const;
    void push_metrics(double tau, double mae);
  };

  struct Slot {
    std::vector<Entry> candidates;
    std::size_t selected = 0;
  };

  Eigen::MatrixXd normalize(std::span<const std::vector<double>> designs) const;
  Eigen::VectorXd function_column(const Archive& archive, int function) const;
  void select(Slot& slot, int function) const;
  void seed_metrics_with_cv(const Eigen::MatrixXd& X,
                            const std::vector<Eigen::VectorXd>& columns);

  std::shared_ptr<const Problem> problem_;
  std::vector<Slot> slots_;
  ErrorEstimate error_;
  bool fitted_ = false;
  bool metrics_seeded_ = false;
};

}  // namespace gpsaf
