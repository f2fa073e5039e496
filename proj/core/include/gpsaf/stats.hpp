#pragma once

#include <span>
#include <vector>

namespace gpsaf {

struct WilcoxonResult {
  double p = 1.0;
  bool reject = false;
};

/// One-sided Wilcoxon rank-sum test of the alternative "x is stochastically
/// smaller than y". Exact null distribution (subset-sum enumeration) when
/// |x| + |y| <= 22 and the combined sample is tie-free; otherwise normal
/// approximation with midranks, tie correction and continuity correction.
/// Degenerate all-equal samples give p = 1. Rejects when p < alpha (strict).
WilcoxonResult wilcoxon_ranksum_less(std::span<const double> x,
                                     std::span<const double> y, double alpha);

struct DominationRanks {
  std::vector<int> dominated_by;  // number of significantly better algorithms
  std::vector<double> ranks;      // tie-averaged, sums to m(m+1)/2
};

/// The ranking protocol for one problem: pairwise one-sided rank-sum tests
/// at level alpha give each algorithm the count of algorithms that
/// significantly beat it; sorting by that count yields ranks, with equal
/// counts sharing the average of the positions they occupy.
///
/// Non-finite indicator values are dropped from an algorithm's sample; an
/// algorithm with fewer than two finite values is treated as failed and is
/// placed behind every non-failed algorithm (tie-averaged among failures).
DominationRanks domination_ranks(
    std::span<const std::vector<double>> samples, double alpha = 0.05);

}  // namespace gpsaf
