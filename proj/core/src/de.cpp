#include "gpsaf/de.hpp"

#include <algorithm>
#include <numeric>

#include "gpsaf/errors.hpp"
#include "gpsaf/operators.hpp"
#include "gpsaf/sampling.hpp"

namespace gpsaf {

DifferentialEvolution::DifferentialEvolution(DeConfig config)
    : config_(config) {
  if (config_.pop_size < 4)
    throw ConfigError("de: pop_size < 4 (needs distinct r1, r2, r3 and target)");
  if (config_.n_offspring < 1) throw ConfigError("de: n_offspring < 1");
  if (!(config_.scale_factor >= 0.0 && config_.scale_factor <= 2.0))
    throw ConfigError("de: scale factor outside [0, 2]");
  if (!(config_.crossover_rate >= 0.0 && config_.crossover_rate <= 1.0))
    throw ConfigError("de: crossover rate outside [0, 1]");
}

void DifferentialEvolution::reset(std::shared_ptr<const Problem> problem,
                                  Rng rng) {
  if (problem->n_obj != 1)
    throw ConfigError("de handles single-objective problems only");
  problem_ = std::move(problem);
  rng_ = rng;
  population_.clear();
  pending_targets_.clear();
}

std::vector<std::vector<double>> DifferentialEvolution::infill() {
  if (!problem_) throw StateError("de: infill before reset");
  if (population_.empty())
    return sample_doe(*problem_, config_.pop_size, rng_);

  const int n = static_cast<int>(population_.size());
  if (pending_targets_.empty()) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng_.shuffle(perm);
    perm.resize(static_cast<std::size_t>(std::min(config_.n_offspring, n)));
    pending_targets_ = std::move(perm);
  }

  std::vector<std::vector<double>> trials;
  trials.reserve(pending_targets_.size());
  for (const std::size_t target : pending_targets_) {
    std::size_t r1, r2, r3;
    do r1 = static_cast<std::size_t>(rng_.uniform_int(0, n - 1));
    while (r1 == target);
    do r2 = static_cast<std::size_t>(rng_.uniform_int(0, n - 1));
    while (r2 == target || r2 == r1);
    do r3 = static_cast<std::size_t>(rng_.uniform_int(0, n - 1));
    while (r3 == target || r3 == r1 || r3 == r2);

    const auto& base = population_[r1].x;
    const auto& xa = population_[r2].x;
    const auto& xb = population_[r3].x;
    const auto& tx = population_[target].x;
    std::vector<double> trial(static_cast<std::size_t>(problem_->n_var));
    const int jrand = rng_.uniform_int(0, problem_->n_var - 1);
    for (int j = 0; j < problem_->n_var; ++j) {
      const auto u = static_cast<std::size_t>(j);
      const double mutant = base[u] + config_.scale_factor * (xa[u] - xb[u]);
      trial[u] =
          (rng_.uniform() < config_.crossover_rate || j == jrand) ? mutant : tx[u];
    }
    problem_->clamp(trial);
    trials.push_back(std::move(trial));
  }
  return trials;
}

void DifferentialEvolution::advance(std::span<const Solution> evaluated) {
  for (const auto& s : evaluated)
    if (!s.has_true_values())
      throw ContractError("de: advance needs true objective values");

  if (population_.empty()) {
    population_.assign(evaluated.begin(), evaluated.end());
    std::stable_sort(population_.begin(), population_.end(),
                     better_single_objective);
    if (static_cast<int>(population_.size()) > config_.pop_size)
      population_.resize(static_cast<std::size_t>(config_.pop_size));
    pending_targets_.clear();
    return;
  }

  if (!pending_targets_.empty()) {
    // One-to-one replacement against the pinned targets, slot by slot.
    const std::size_t k = std::min(evaluated.size(), pending_targets_.size());
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t target = pending_targets_[i];
      if (compare(evaluated[i], population_[target], false) == Ordering::A_WINS)
        population_[target] = evaluated[i];
    }
    pending_targets_.clear();
    return;
  }

  // No pending trials (advance called with an external design set): fall back
  // to (mu+lambda) survival.
  population_.insert(population_.end(), evaluated.begin(), evaluated.end());
  std::stable_sort(population_.begin(), population_.end(),
                   better_single_objective);
  population_.resize(
      std::min(population_.size(), static_cast<std::size_t>(config_.pop_size)));
}

std::unique_ptr<BaselineAlgorithm> DifferentialEvolution::snapshot() const {
  return std::make_unique<DifferentialEvolution>(*this);
}

void DifferentialEvolution::reseed(Rng rng) { rng_ = rng; }

}  // namespace gpsaf
