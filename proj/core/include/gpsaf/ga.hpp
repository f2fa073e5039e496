#pragma once

#include "gpsaf/algorithm.hpp"

namespace gpsaf {

struct GaConfig {
  int pop_size = 20;
  int n_offspring = 10;
  double sbx_eta = 15.0;
  double sbx_prob = 0.9;
  double pm_eta = 20.0;
  double pm_prob = 0.0;  // <= 0 means 1/n_var, resolved at reset
  int tournament_size = 2;
};

/// Real-coded (mu+lambda) genetic algorithm, single-objective, with the
/// parameter-less feasibility-first constraint handling of compare().
/// First infill is a space-filling initial population; afterwards offspring
/// come from tournament selection, SBX and polynomial mutation.
class GeneticAlgorithm final : public BaselineAlgorithm {
 public:
  explicit GeneticAlgorithm(GaConfig config = {});

  void reset(std::shared_ptr<const Problem> problem, Rng rng) override;
  std::vector<std::vector<double>> infill() override;
  void advance(std::span<const Solution> evaluated) override;
  std::unique_ptr<BaselineAlgorithm> snapshot() const override;
  void reseed(Rng rng) override;
  std::string name() const override { return "ga"; }

  const std::vector<Solution>& population() const { return population_; }

 private:
  GaConfig config_;
  std::shared_ptr<const Problem> problem_;
  Rng rng_{0};
  double pm_prob_ = 0.0;
  std::vector<Solution> population_;
};

}  // namespace gpsaf
