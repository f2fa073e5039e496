#pragma once

#include "gpsaf/algorithm.hpp"

namespace gpsaf {

struct Nsga2Config {
  int pop_size = 20;
  int n_offspring = 10;
  double sbx_eta = 15.0;
  double sbx_prob = 0.9;
  double pm_eta = 20.0;
  double pm_prob = 0.0;  // <= 0 means 1/n_var
};

/// NSGA-II for two or more objectives. Survival is feasibility-first:
/// feasible solutions by non-dominated rank then crowding distance,
/// infeasible solutions after all feasible ones, ordered by violation.
class Nsga2 final : public BaselineAlgorithm {
 public:
  explicit Nsga2(Nsga2Config config = {});

  void reset(std::shared_ptr<const Problem> problem, Rng rng) override;
  std::vector<std::vector<double>> infill() override;
  void advance(std::span<const Solution> evaluated) override;
  std::unique_ptr<BaselineAlgorithm> snapshot() const override;
  void reseed(Rng rng) override;
  std::string name() const override { return "nsga2"; }

  const std::vector<Solution>& population() const { return population_; }

 private:
  struct MemberMeta {
    double cv = 0.0;
    int rank = 0;
    double crowding = 0.0;
  };

  std::size_t mating_tournament();

  Nsga2Config config_;
  std::shared_ptr<const Problem> problem_;
  Rng rng_{0};
  double pm_prob_ = 0.0;
  std::vector<Solution> population_;
  std::vector<MemberMeta> meta_;
};

}  // namespace gpsaf
