#include "gpsaf/nsga2.hpp"

#include <algorithm>
#include <numeric>

#include "gpsaf/errors.hpp"
#include "gpsaf/operators.hpp"
#include "gpsaf/sampling.hpp"

namespace gpsaf {

Nsga2::Nsga2(Nsga2Config config) : config_(config) {
  if (config_.pop_size < 2) throw ConfigError("nsga2: pop_size < 2");
  if (config_.n_offspring < 1) throw ConfigError("nsga2: n_offspring < 1");
}

void Nsga2::reset(std::shared_ptr<const Problem> problem, Rng rng) {
  if (problem->n_obj < 2)
    throw ConfigError("nsga2 needs at least two objectives (use ga instead)");
  problem_ = std::move(problem);
  rng_ = rng;
  pm_prob_ = config_.pm_prob > 0.0 ? config_.pm_prob : 1.0 / problem_->n_var;
  population_.clear();
  meta_.clear();
}

std::size_t Nsga2::mating_tournament() {
  const int n = static_cast<int>(population_.size());
  const auto a = static_cast<std::size_t>(rng_.uniform_int(0, n - 1));
  const auto b = static_cast<std::size_t>(rng_.uniform_int(0, n - 1));
  const auto& ma = meta_[a];
  const auto& mb = meta_[b];
  const bool fa = ma.cv == 0.0;
  const bool fb = mb.cv == 0.0;
  if (fa != fb) return fa ? a : b;
  if (!fa && ma.cv != mb.cv) return ma.cv < mb.cv ? a : b;
  if (ma.rank != mb.rank) return ma.rank < mb.rank ? a : b;
  if (ma.crowding != mb.crowding) return ma.crowding > mb.crowding ? a : b;
  return rng_.uniform() < 0.5 ? a : b;
}

std::vector<std::vector<double>> Nsga2::infill() {
  if (!problem_) throw StateError("nsga2: infill before reset");
  if (population_.empty())
    return sample_doe(*problem_, config_.pop_size, rng_);

  std::vector<std::vector<double>> offspring;
  offspring.reserve(static_cast<std::size_t>(config_.n_offspring));
  while (static_cast<int>(offspring.size()) < config_.n_offspring) {
    const auto p1 = mating_tournament();
    const auto p2 = mating_tournament();
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

void Nsga2::advance(std::span<const Solution> evaluated) {
  for (const auto& s : evaluated) {
    if (!s.has_true_values())
      throw ContractError("nsga2: advance needs true objective values");
    if (static_cast<int>(s.f->size()) != problem_->n_obj)
      throw ContractError("nsga2: advance objective dimension mismatch");
  }

  std::vector<Solution> merged = population_;
  merged.insert(merged.end(), evaluated.begin(), evaluated.end());

  std::vector<std::size_t> feasible;
  std::vector<std::size_t> infeasible;
  std::vector<double> cv(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    cv[i] = violation(merged[i], false);
    (cv[i] == 0.0 ? feasible : infeasible).push_back(i);
  }
  std::stable_sort(infeasible.begin(), infeasible.end(),
                   [&](std::size_t a, std::size_t b) { return cv[a] < cv[b]; });

  std::vector<std::vector<double>> objs(feasible.size());
  for (std::size_t i = 0; i < feasible.size(); ++i) objs[i] = *merged[feasible[i]].f;
  const auto fronts = nondominated_sort(objs);

  std::vector<Solution> survivors;
  std::vector<MemberMeta> meta;
  const auto take = [&](std::size_t idx, int rank, double crowd) {
    survivors.push_back(merged[idx]);
    meta.push_back({cv[idx], rank, crowd});
  };

  for (std::size_t fi = 0;
       fi < fronts.size() && static_cast<int>(survivors.size()) < config_.pop_size;
       ++fi) {
    const auto& front = fronts[fi];
    const auto crowd = crowding_distance(objs, front);
    const int room = config_.pop_size - static_cast<int>(survivors.size());
    if (static_cast<int>(front.size()) <= room) {
      for (std::size_t k = 0; k < front.size(); ++k)
        take(feasible[front[k]], static_cast<int>(fi), crowd[k]);
    } else {
      // Split front: most crowded first, ties keep index order.
      std::vector<std::size_t> order(front.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return crowd[a] > crowd[b];
      });
      for (int k = 0; k < room; ++k)
        take(feasible[front[order[static_cast<std::size_t>(k)]]],
             static_cast<int>(fi), crowd[order[static_cast<std::size_t>(k)]]);
    }
  }
  const int worst_rank = static_cast<int>(fronts.size());
  for (std::size_t k = 0;
       k < infeasible.size() && static_cast<int>(survivors.size()) < config_.pop_size;
       ++k)
    take(infeasible[k], worst_rank, 0.0);

  population_ = std::move(survivors);
  meta_ = std::move(meta);
}

std::unique_ptr<BaselineAlgorithm> Nsga2::snapshot() const {
  return std::make_unique<Nsga2>(*this);
}

void Nsga2::reseed(Rng rng) { rng_ = rng; }

}  // namespace gpsaf
