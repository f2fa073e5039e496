#pragma once

#include <span>
#include <vector>

#include "gpsaf/compare.hpp"
#include "gpsaf/rng.hpp"
#include "gpsaf/types.hpp"

namespace gpsaf {

/// Simulated binary crossover (bounded). Produces two children per parent
/// pair; with probability 1 - prob the parents are returned unchanged.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> p1, std::span<const double> p2,
    const Problem& problem, double eta, double prob, Rng& rng);

/// Bounded polynomial mutation, in place. Each variable mutates with
/// probability `prob`.
void polynomial_mutation(std::vector<double>& x, const Problem& problem,
                         double eta, double prob, Rng& rng);

/// k-ary tournament over population indices using compare() on true values;
/// ties are broken by coin flip. Returns the winning index.
std::size_t tournament_select(std::span<const Solution> population, int k,
                              Rng& rng);

/// Ordering key for feasibility-first single-objective survival:
/// feasible before infeasible, feasible by f[0], infeasible by violation.
/// Stable sorting with this keeps insertion order on ties.
bool better_single_objective(const Solution& a, const Solution& b);

/// Fast non-dominated sort on objective vectors. Returns fronts of indices;
/// front 0 is the non-dominated set.
std::vector<std::vector<std::size_t>> nondominated_sort(
    std::span<const std::vector<double>> objectives);

/// Indices of the mutually non-dominated members of `objectives`.
std::vector<std::size_t> nondominated_filter(
    std::span<const std::vector<double>> objectives);

/// Crowding distances within one front (indices into `objectives`).
/// Extreme points per objective get +infinity.
std::vector<double> crowding_distance(
    std::span<const std::vector<double>> objectives,
    std::span<const std::size_t> front);

}  // namespace gpsaf
