#pragma once

#include "gpsaf/algorithm.hpp"

namespace gpsaf {

struct DeConfig {
  int pop_size = 20;
  int n_offspring = 10;
  double scale_factor = 0.5;   // F
  double crossover_rate = 0.9; // CR
};

/// DE/rand/1/bin. Each infill batch proposes trial vectors against targets
/// drawn as a random permutation of population indices; the targets stay
/// pinned until the next advance so repeated infill calls keep slot-stable
/// one-to-one semantics. advance() replaces a target only when its trial
/// wins the feasibility-first comparison.
class DifferentialEvolution final : public BaselineAlgorithm {
 public:
  explicit DifferentialEvolution(DeConfig config = {});

  void reset(std::shared_ptr<const Problem> problem, Rng rng) override;
  std::vector<std::vector<double>> infill() override;
  void advance(std::span<const Solution> evaluated) override;
  std::unique_ptr<BaselineAlgorithm> snapshot() const override;
  void reseed(Rng rng) override;
  std::string name() const override { return "de"; }

  const std::vector<Solution>& population() const { return population_; }

 private:
  DeConfig config_;
  std::shared_ptr<const Problem> problem_;
  Rng rng_{0};
  std::vector<Solution> population_;
  std::vector<std::size_t> pending_targets_;
};

}  // namespace gpsaf
