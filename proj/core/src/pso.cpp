#include "gpsaf/pso.hpp"

#include <algorithm>
#include <cmath>

#include "gpsaf/compare.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/sampling.hpp"

namespace gpsaf {

ParticleSwarm::ParticleSwarm(PsoConfig config) : config_(config) {
  if (config_.swarm_size < 2) throw ConfigError("pso: swarm_size < 2");
  if (!(config_.inertia >= 0.0 && config_.inertia < 1.0))
    throw ConfigError("pso: inertia outside [0, 1)");
  if (config_.c1 <= 0.0 || config_.c2 <= 0.0)
    throw ConfigError("pso: c1 and c2 must be positive");
  if (!(config_.v_max_fraction > 0.0))
    throw ConfigError("pso: v_max_fraction must be positive");
}

void ParticleSwarm::reset(std::shared_ptr<const Problem> problem, Rng rng) {
  if (problem->n_obj != 1)
    throw ConfigError("pso handles single-objective problems only");
  problem_ = std::move(problem);
  rng_ = rng;
  positions_.clear();
  velocities_.clear();
  pbest_.clear();
  gbest_.reset();
}

const Solution& ParticleSwarm::global_best() const {
  if (!gbest_) throw StateError("pso: no evaluated solutions yet");
  return *gbest_;
}

std::vector<std::vector<double>> ParticleSwarm::infill() {
  if (!problem_) throw StateError("pso: infill before reset");
  if (positions_.empty())
    return sample_doe(*problem_, config_.swarm_size, rng_);

  const int n_var = problem_->n_var;
  std::vector<std::vector<double>> next;
  next.reserve(positions_.size());
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    std::vector<double> x = positions_[i];
    for (int d = 0; d < n_var; ++d) {
      const auto u = static_cast<std::size_t>(d);
      const double range = problem_->upper[u] - problem_->lower[u];
      const double v_max = config_.v_max_fraction * range;
      const double r1 = rng_.uniform();
      const double r2 = rng_.uniform();
      double v = config_.inertia * velocities_[i][u] +
                 config_.c1 * r1 * (pbest_[i].x[u] - x[u]) +
                 config_.c2 * r2 * (gbest_->x[u] - x[u]);
      v = std::clamp(v, -v_max, v_max);
      x[u] = std::clamp(x[u] + v, problem_->lower[u], problem_->upper[u]);
    }
    next.push_back(std::move(x));
  }
  return next;
}

void ParticleSwarm::advance(std::span<const Solution> evaluated) {
  for (const auto& s : evaluated)
    if (!s.has_true_values())
      throw ContractError("pso: advance needs true objective values");
  if (evaluated.empty()) return;

  if (positions_.empty()) {
    const auto n = std::min(evaluated.size(),
                            static_cast<std::size_t>(config_.swarm_size));
    for (std::size_t i = 0; i < n; ++i) {
      positions_.push_back(evaluated[i].x);
      velocities_.emplace_back(static_cast<std::size_t>(problem_->n_var), 0.0);
      pbest_.push_back(evaluated[i]);
    }
  } else {
    const std::size_t n = std::min(evaluated.size(), positions_.size());
    for (std::size_t i = 0; i < n; ++i) {
      for (int d = 0; d < problem_->n_var; ++d) {
        const auto u = static_cast<std::size_t>(d);
        velocities_[i][u] = evaluated[i].x[u] - positions_[i][u];
      }
      positions_[i] = evaluated[i].x;
      if (compare(evaluated[i], pbest_[i], false) == Ordering::A_WINS)
        pbest_[i] = evaluated[i];
    }
  }
  for (const auto& s : evaluated)
    if (!gbest_ || compare(s, *gbest_, false) == Ordering::A_WINS) gbest_ = s;
}

std::unique_ptr<BaselineAlgorithm> ParticleSwarm::snapshot() const {
  return std::make_unique<ParticleSwarm>(*this);
}

void ParticleSwarm::reseed(Rng rng) { rng_ = rng; }

}  // namespace gpsaf
