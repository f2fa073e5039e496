#pragma once

#include "gpsaf/algorithm.hpp"

namespace gpsaf {

struct PsoConfig {
  int swarm_size = 20;
  double inertia = 0.7;  // w
  double c1 = 1.5;       // cognitive pull toward the personal best
  double c2 = 1.5;       // social pull toward the global best
  double v_max_fraction = 0.2;  // velocity cap as a fraction of the range
};

/// Particle swarm, single-objective, feasibility-first replacement for the
/// personal and global bests. infill() proposes the whole swarm's next
/// positions; advance() commits positions (velocity becomes the realized
/// displacement, which keeps the state consistent when a wrapper modified
/// the proposed designs) and updates pbest/gbest.
class ParticleSwarm final : public BaselineAlgorithm {
 public:
  explicit ParticleSwarm(PsoConfig config = {});

  void reset(std::shared_ptr<const Problem> problem, Rng rng) override;
  std::vector<std::vector<double>> infill() override;
  void advance(std::span<const Solution> evaluated) override;
  std::unique_ptr<BaselineAlgorithm> snapshot() const override;
  void reseed(Rng rng) override;
  std::string name() const override { return "pso"; }

  const std::vector<Solution>& personal_bests() const { return pbest_; }
  const Solution& global_best() const;

 private:
  PsoConfig config_;
  std::shared_ptr<const Problem> problem_;
  Rng rng_{0};
  std::vector<std::vector<double>> positions_;
  std::vector<std::vector<double>> velocities_;
  std::vector<Solution> pbest_;
  std::optional<Solution> gbest_;
};

}  // namespace gpsaf
