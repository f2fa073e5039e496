#pragma once

#include <vector>

#include "gpsaf/rng.hpp"
#include "gpsaf/types.hpp"

namespace gpsaf {

/// Plain Latin hypercube sample of n_points designs in [lower, upper].
/// Each variable's values occupy n_points distinct equal strata.
std::vector<std::vector<double>> latin_hypercube(const Problem& problem,
                                                 int n_points, Rng& rng);

/// Space-filling design of experiments: the best of 100 Latin hypercube
/// draws by maximin criterion (largest minimal pairwise distance, measured
/// in the unit box). The first draw equals latin_hypercube() with the same
/// rng state, so the result is never worse than a plain sample.
std::vector<std::vector<double>> sample_doe(const Problem& problem,
                                            int doe_size, Rng& rng);

}  // namespace gpsaf
