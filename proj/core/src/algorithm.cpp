#include "gpsaf/algorithm.hpp"

#include "gpsaf/errors.hpp"

namespace gpsaf {

std::vector<Solution> evaluate_designs(
    const Problem& problem, std::span<const std::vector<double>> designs) {
  std::vector<Solution> out;
  out.reserve(designs.size());
  for (const auto& design : designs) {
    Solution s;
    s.x = design;
    problem.clamp(s.x);
    auto [f, g] = problem.evaluate(s.x);
    s.f = std::move(f);
    s.g = std::move(g);
    out.push_back(std::move(s));
  }
  return out;
}

Archive run_baseline(BaselineAlgorithm& algorithm,
                     std::shared_ptr<const Problem> problem, Budget budget,
                     std::uint64_t seed) {
  const Rng run_rng(seed);
  algorithm.reset(problem, run_rng.fork("algorithm"));

  Archive archive;
  while (budget.remaining() > 0) {
    auto designs = algorithm.infill();
    if (designs.empty()) throw StateError("algorithm produced no infill designs");
    if (static_cast<int>(designs.size()) > budget.remaining())
      designs.resize(static_cast<std::size_t>(budget.remaining()));
    auto evaluated = evaluate_designs(*problem, designs);
    budget.consume(static_cast<int>(evaluated.size()));
    algorithm.advance(evaluated);
    for (auto& s : evaluated) archive.append(std::move(s));
  }
  return archive;
}

}  // namespace gpsaf
