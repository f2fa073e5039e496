#include "gpsaf/ga.hpp"

#include <algorithm>

#include "gpsaf/errors.hpp"
#include "gpsaf/operators.hpp"
#include "gpsaf/sampling.hpp"

namespace gpsaf {

GeneticAlgorithm::GeneticAlgorithm(GaConfig config) : config_(config) {
  if (config_.pop_size < 2) throw ConfigError("ga: pop_size < 2");
  if (config_.n_offspring < 1) throw ConfigError("ga: n_offspring < 1");
  if (!(config_.sbx_prob > 0.0 && config_.sbx_prob <= 1.0))
    throw ConfigError("ga: sbx_prob outside (0, 1]");
  if (config_.tournament_size < 2) throw ConfigError("ga: tournament_size < 2");
}

void GeneticAlgorithm::reset(std::shared_ptr<const Problem> problem, Rng rng) {
  if (problem->n_obj != 1)
    throw ConfigError("ga handles single-objective problems only");
  problem_ = std::move(problem);
  rng_ = rng;
  pm_prob_ = config_.pm_prob > 0.0 ? config_.pm_prob : 1.0 / problem_->n_var;
  if (pm_prob_ > 1.0) throw ConfigError("ga: pm_prob > 1");
  population_.clear();
}

std::vector<std::vector<double>> GeneticAlgorithm::infill() {
  if (!problem_) throw StateError("ga: infill before reset");
  if (population_.empty())
    return sample_doe(*problem_, config_.pop_size, rng_);

  std::vector<std::vector<double>> offspring;
  offspring.reserve(static_cast<std::size_t>(config_.n_offspring));
  while (static_cast<int>(offspring.size()) < config_.n_offspring) {
    const auto p1 = tournament_select(population_, config_.tournament_size, rng_);
    const auto p2 = tournament_select(population_, config_.tournament_size, rng_);
    auto [c1, c2] = sbx_crossover(population_[p1].x, population_[p2].x,
                                  *problem_, config_.sbx_eta, config_.sbx_prob,
                                  rng_);
    polynomial_mutation(c1, *problem_, config_.pm_eta, pm_prob_, rng_);
    offspring.push_back(std::move(c1));
    if (static_cast<int>(offspring.size()) < config_.n_offspring) {
      polynomial_mutation(c2, *problem_, config_.pm_eta, pm_prob_, rng_);
      offspring.push_back(std::move(c2));
    }
  }
  return offspring;
}

void GeneticAlgorithm::advance(std::span<const Solution> evaluated) {
  for (const auto& s : evaluated) {
    if (!s.has_true_values())
      throw ContractError("ga: advance needs true objective values");
    if (static_cast<int>(s.x.size()) != problem_->n_var)
      throw ContractError("ga: advance design dimension mismatch");
  }
  // (mu+lambda) survival, stable so ties keep insertion order.
  population_.insert(population_.end(), evaluated.begin(), evaluated.end());
  std::stable_sort(population_.begin(), population_.end(),
                   better_single_objective);
  if (static_cast<int>(population_.size()) > config_.pop_size)
    population_.resize(static_cast<std::size_t>(config_.pop_size));
}

std::unique_ptr<BaselineAlgorithm> GeneticAlgorithm::snapshot() const {
  return std::make_unique<GeneticAlgorithm>(*this);
}

void GeneticAlgorithm::reseed(Rng rng) { rng_ = rng; }

}  // namespace gpsaf
