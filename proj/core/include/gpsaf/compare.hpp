#pragma once

#include <span>

#include "gpsaf/types.hpp"

namespace gpsaf {

enum class Ordering { A_WINS, B_WINS, TIE };

/// Sum of positive constraint values; 0 iff feasible.
double violation(const Solution& s, bool use_predicted);
double violation(std::span<const double> g);

/// Feasibility-first comparison:
///   - both infeasible: smaller violation wins
///   - exactly one feasible: the feasible one wins
///   - both feasible (or unconstrained): Pareto dominance on objectives
/// Mutual non-domination or equal violation is a TIE; resolving ties randomly
/// is the caller's job, the comparison itself is pure.
Ordering compare(const Solution& a, const Solution& b, bool use_predicted);

/// True iff `a` weakly dominates `b` with at least one strict improvement.
bool dominates(std::span<const double> a, std::span<const double> b);

}  // namespace gpsaf
