#pragma once

#include <span>
#include <vector>

#include "gpsaf/compare.hpp"
#include "gpsaf/metrics.hpp"
#include "gpsaf/rng.hpp"
#include "gpsaf/types.hpp"

namespace gpsaf {

/// Compares two solutions on their predicted values after adding independent
/// Normal(0, e_i^2) noise to every objective and constraint of each solution
/// (e_i is the tracked smoothed error of function i, objectives first).
/// Remaining ties are broken by coin flip, so a winner is always declared.
/// The stored predictions are never modified.
Ordering compare_noisy(const Solution& a, const Solution& b,
                       const ErrorEstimate& e, Rng& rng);

/// Bracket elimination on a fixed participant order (indices into
/// `candidates`): pairs fight under compare_noisy, odd rounds let one random
/// participant compete twice, and when a final halving eliminates too many,
/// random losers of the previous round are re-admitted. Returns
/// min(k, distinct participants) distinct indices.
std::vector<std::size_t> knockout_rounds(std::span<const Solution> candidates,
                                         std::span<const std::size_t> order,
                                         const ErrorEstimate& e, int k,
                                         Rng& rng);

/// Probabilistic knockout tournament: shuffles the candidate set and runs
/// knockout_rounds. Returns min(k, |candidates|) distinct members.
std::vector<Solution> prob_knockout_tournament(
    std::span<const Solution> candidates, const ErrorEstimate& e, int k,
    Rng& rng);

}  // namespace gpsaf
