#include "gpsaf/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gpsaf/errors.hpp"
#include "gpsaf/plog.hpp"

namespace gpsaf {
namespace {

std::vector<std::pair<std::string, RbfConfig>> rbf_grid() {
  std::vector<std::pair<std::string, RbfConfig>> grid;
  const std::pair<std::string, RbfKernel> kernels[] = {
      {"cubic", RbfKernel::kCubic},
      {"gauss", RbfKernel::kGaussian},
      {"tps", RbfKernel::kThinPlate}};
  for (const auto& [kname, kernel] : kernels)
    for (const int tail : {0, 1}) {
      RbfConfig cfg;
      cfg.kernel = kernel;
      cfg.tail_degree = tail;
      grid.emplace_back("rbf-" + kname + "-t" + std::to_string(tail), cfg);
    }
  return grid;
}

std::vector<std::pair<std::string, KrigingConfig>> kriging_grid() {
  KrigingConfig raw;
  KrigingConfig standardized;
  standardized.standardize_output = true;
  return {{"krig-raw", raw}, {"krig-std", standardized}};
}

}  // namespace

CandidateModel::CandidateModel(std::string id, RbfConfig config, bool use_plog)
    : id_(std::move(id)), plog_(use_plog), model_(RbfModel(config)),
      config_(config) {}

CandidateModel::CandidateModel(std::string id, KrigingConfig config,
                               bool use_plog)
    : id_(std::move(id)), plog_(use_plog), model_(KrigingModel(config)),
      config_(config) {}

void CandidateModel::fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  if (!y.allFinite()) throw FitError("candidate: non-finite training values");
  Eigen::VectorXd target = y;
  if (plog_)
    target = y.unaryExpr([](double v) { return plog(v); });
  std::visit([&](auto& m) { m.fit(X, target); }, model_);
}

Eigen::VectorXd CandidateModel::predict(const Eigen::MatrixXd& X) const {
  Eigen::VectorXd out =
      std::visit([&](const auto& m) { return m.predict(X); }, model_);
  if (plog_)
    out = out.unaryExpr([](double v) {
      return v >= 0.0 ? std::expm1(v) : -std::expm1(-v);
    });
  return out;
}

CandidateModel CandidateModel::blank_clone() const {
  if (std::holds_alternative<RbfConfig>(config_))
    return CandidateModel(id_, std::get<RbfConfig>(config_), plog_);
  return CandidateModel(id_, std::get<KrigingConfig>(config_), plog_);
}

double SurrogateEnsemble::Entry::smoothed_tau() const {
  if (tau_window.empty()) return std::numeric_limits<double>::infinity();
  return std::accumulate(tau_window.begin(), tau_window.end(), 0.0) /
         static_cast<double>(tau_window.size());
}

double SurrogateEnsemble::Entry::smoothed_mae() const {
  if (mae_window.empty()) return std::numeric_limits<double>::infinity();
  return std::accumulate(mae_window.begin(), mae_window.end(), 0.0) /
         static_cast<double>(mae_window.size());
}

void SurrogateEnsemble::Entry::push_metrics(double tau, double mae) {
  tau_window.push_back(tau);
  mae_window.push_back(mae);
  if (tau_window.size() > ErrorEstimate::kWindow) tau_window.pop_front();
  if (mae_window.size() > ErrorEstimate::kWindow) mae_window.pop_front();
}

SurrogateEnsemble::SurrogateEnsemble(std::shared_ptr<const Problem> problem)
    : problem_(std::move(problem)),
      error_(problem_->n_obj + problem_->n_constr) {
  slots_.resize(static_cast<std::size_t>(problem_->n_obj + problem_->n_constr));
  for (std::size_t fn = 0; fn < slots_.size(); ++fn) {
    const bool is_constraint = fn >= static_cast<std::size_t>(problem_->n_obj);
    auto& list = slots_[fn].candidates;
    for (const auto& [id, cfg] : rbf_grid())
      list.push_back({CandidateModel(id, cfg, false), false, {}, {}});
    for (const auto& [id, cfg] : kriging_grid())
      list.push_back({CandidateModel(id, cfg, false), false, {}, {}});
    if (is_constraint) {
      for (const auto& [id, cfg] : rbf_grid())
        list.push_back({CandidateModel("plog-" + id, cfg, true), false, {}, {}});
      for (const auto& [id, cfg] : kriging_grid())
        list.push_back({CandidateModel("plog-" + id, cfg, true), false, {}, {}});
    }
  }
}

Eigen::MatrixXd SurrogateEnsemble::normalize(
    std::span<const std::vector<double>> designs) const {
  const int n_var = problem_->n_var;
  Eigen::MatrixXd X(static_cast<Eigen::Index>(designs.size()), n_var);
  for (std::size_t r = 0; r < designs.size(); ++r) {
    if (static_cast<int>(designs[r].size()) != n_var)
      throw ContractError("ensemble: design dimension mismatch");
    for (int d = 0; d < n_var; ++d) {
      const auto u = static_cast<std::size_t>(d);
      X(static_cast<Eigen::Index>(r), d) =
          (designs[r][u] - problem_->lower[u]) /
          (problem_->upper[u] - problem_->lower[u]);
    }
  }
  return X;
}

Eigen::VectorXd SurrogateEnsemble::function_column(const Archive& archive,
                                                   int function) const {
  Eigen::VectorXd y(static_cast<Eigen::Index>(archive.size()));
  const int n_obj = problem_->n_obj;
  for (std::size_t i = 0; i < archive.size(); ++i)
    y(static_cast<Eigen::Index>(i)) =
        function < n_obj
            ? (*archive[i].f)[static_cast<std::size_t>(function)]
            : (*archive[i].g)[static_cast<std::size_t>(function - n_obj)];
  return y;
}

void SurrogateEnsemble::select(Slot& slot, int function) const {
  const auto better = [](const Entry& a, const Entry& b) {
    if (a.smoothed_tau() != b.smoothed_tau())
      return a.smoothed_tau() < b.smoothed_tau();
    return a.smoothed_mae() < b.smoothed_mae();
  };
  const Entry* best_plain = nullptr;
  const Entry* best_plog = nullptr;
  std::size_t plain_idx = 0, plog_idx = 0;
  for (std::size_t i = 0; i < slot.candidates.size(); ++i) {
    const Entry& e = slot.candidates[i];
    if (!e.ok || e.tau_window.empty()) continue;
    if (e.model.uses_plog()) {
      if (!best_plog || better(e, *best_plog)) {
        best_plog = &e;
        plog_idx = i;
      }
    } else {
      if (!best_plain || better(e, *best_plain)) {
        best_plain = &e;
        plain_idx = i;
      }
    }
  }
  if (!best_plain && !best_plog)
    throw FitError("ensemble: all candidates failed for function " +
                   std::to_string(function));
  if (!best_plain) {
    slot.selected = plog_idx;
    return;
  }
  // PLOG is adopted only when strictly better by the rank metric.
  if (best_plog && best_plog->smoothed_tau() < best_plain->smoothed_tau())
    slot.selected = plog_idx;
  else
    slot.selected = plain_idx;
}

void SurrogateEnsemble::seed_metrics_with_cv(
    const Eigen::MatrixXd& X, const std::vector<Eigen::VectorXd>& columns) {
  const auto n = X.rows();
  const int folds = std::min<int>(5, static_cast<int>(n));
  std::vector<double> seed_mae(slots_.size());
  std::vector<double> seed_tau(slots_.size());

  for (std::size_t fn = 0; fn < slots_.size(); ++fn) {
    const Eigen::VectorXd& y = columns[fn];
    for (auto& entry : slots_[fn].candidates) {
      if (!entry.ok) continue;
      Eigen::VectorXd oof(n);
      bool failed = false;
      for (int fold = 0; fold < folds && !failed; ++fold) {
        std::vector<Eigen::Index> train, test;
        for (Eigen::Index i = 0; i < n; ++i)
          (static_cast<int>(i) % folds == fold ? test : train).push_back(i);
        Eigen::MatrixXd Xt(static_cast<Eigen::Index>(train.size()), X.cols());
        Eigen::VectorXd yt(static_cast<Eigen::Index>(train.size()));
        for (std::size_t i = 0; i < train.size(); ++i) {
          Xt.row(static_cast<Eigen::Index>(i)) = X.row(train[i]);
          yt(static_cast<Eigen::Index>(i)) = y(train[i]);
        }
        Eigen::MatrixXd Xv(static_cast<Eigen::Index>(test.size()), X.cols());
        for (std::size_t i = 0; i < test.size(); ++i)
          Xv.row(static_cast<Eigen::Index>(i)) = X.row(test[i]);
        try {
          CandidateModel fold_model = entry.model.blank_clone();
          fold_model.fit(Xt, yt);
          const Eigen::VectorXd pred = fold_model.predict(Xv);
          for (std::size_t i = 0; i < test.size(); ++i) oof(test[i]) = pred(static_cast<Eigen::Index>(i));
        } catch (const Error&) {
          failed = true;
        }
      }
      if (failed || !oof.allFinite()) {
        entry.ok = false;
        continue;
      }
      std::vector<double> pred(oof.data(), oof.data() + oof.size());
      std::vector<double> truth(y.data(), y.data() + y.size());
      const double tau = kendall_tau_distance(pred, truth);
      const double mae = (oof - y).cwiseAbs().maxCoeff();
      entry.push_metrics(tau, mae);
    }
    select(slots_[fn], static_cast<int>(fn));
    const auto& chosen = slots_[fn].candidates[slots_[fn].selected];
    seed_mae[fn] = chosen.smoothed_mae();
    seed_tau[fn] = chosen.smoothed_tau();
  }
  error_.push_mae(seed_mae);
  error_.push_tau(seed_tau);
}

void SurrogateEnsemble::fit(const Archive& archive) {
  if (static_cast<int>(archive.size()) < problem_->n_var + 2)
    throw ContractError("ensemble: archive too small to fit (need n_var + 2)");

  std::vector<std::vector<double>> designs;
  designs.reserve(archive.size());
  for (const auto& s : archive) designs.push_back(s.x);
  const Eigen::MatrixXd X = normalize(designs);

  std::vector<Eigen::VectorXd> columns(slots_.size());
  for (std::size_t fn = 0; fn < slots_.size(); ++fn)
    columns[fn] = function_column(archive, static_cast<int>(fn));

  for (std::size_t fn = 0; fn < slots_.size(); ++fn) {
    bool any_ok = false;
    for (auto& entry : slots_[fn].candidates) {
      try {
        entry.model.fit(X, columns[fn]);
        entry.ok = true;
        any_ok = true;
      } catch (const Error&) {
        entry.ok = false;
      }
    }
    if (!any_ok)
      throw FitError("ensemble: all candidates failed for function " +
                     std::to_string(fn));
  }
  fitted_ = true;

  if (!metrics_seeded_) {
    seed_metrics_with_cv(X, columns);
    metrics_seeded_ = true;
  }
}

Predictions SurrogateEnsemble::predict(
    std::span<const std::vector<double>> designs) const {
  if (!fitted_) throw StateError("ensemble: predict before fit");
  Predictions out;
  out.f_hat.assign(designs.size(),
                   std::vector<double>(static_cast<std::size_t>(problem_->n_obj)));
  out.g_hat.assign(designs.size(), std::vector<double>(static_cast<std::size_t>(
                                       problem_->n_constr)));
  if (designs.empty()) return out;

  const Eigen::MatrixXd X = normalize(designs);
  for (std::size_t fn = 0; fn < slots_.size(); ++fn) {
    const auto& slot = slots_[fn];
    const Eigen::VectorXd pred = slot.candidates[slot.selected].model.predict(X);
    const auto n_obj = static_cast<std::size_t>(problem_->n_obj);
    for (std::size_t r = 0; r < designs.size(); ++r) {
      if (fn < n_obj)
        out.f_hat[r][fn] = pred(static_cast<Eigen::Index>(r));
      else
        out.g_hat[r][fn - n_obj] = pred(static_cast<Eigen::Index>(r));
    }
  }
  return out;
}

void SurrogateEnsemble::observe(std::span<const Solution> evaluated) {
  if (!fitted_) throw StateError("ensemble: observe before fit");
  if (evaluated.empty()) return;

  std::vector<std::vector<double>> designs;
  designs.reserve(evaluated.size());
  for (const auto& s : evaluated) {
    if (!s.has_true_values())
      throw ContractError("ensemble: observe needs true values");
    designs.push_back(s.x);
  }
  const Eigen::MatrixXd X = normalize(designs);
  const auto n_obj = static_cast<std::size_t>(problem_->n_obj);

  for (std::size_t fn = 0; fn < slots_.size(); ++fn) {
    std::vector<double> truth(evaluated.size());
    for (std::size_t r = 0; r < evaluated.size(); ++r)
      truth[r] = fn < n_obj ? (*evaluated[r].f)[fn] : (*evaluated[r].g)[fn - n_obj];
    for (auto& entry : slots_[fn].candidates) {
      if (!entry.ok) continue;
      const Eigen::VectorXd pred = entry.model.predict(X);
      double mae = 0.0;
      for (std::size_t r = 0; r < evaluated.size(); ++r)
        mae = std::max(mae, std::abs(pred(static_cast<Eigen::Index>(r)) - truth[r]));
      double tau = 0.0;
      if (evaluated.size() >= 2) {
        std::vector<double> p(pred.data(), pred.data() + pred.size());
        tau = kendall_tau_distance(p, truth);
      }
      entry.push_metrics(tau, mae);
    }
    select(slots_[fn], static_cast<int>(fn));
  }
}

std::vector<std::string> SurrogateEnsemble::selected_ids() const {
  std::vector<std::string> ids;
  ids.reserve(slots_.size());
  for (const auto& slot : slots_)
    ids.push_back(slot.candidates[slot.selected].model.id());
  return ids;
}

}  // namespace gpsaf
