#pragma once

#include <span>
#include <vector>

namespace gpsaf {

/// Inverted generational distance: mean over reference points of the
/// Euclidean distance to the nearest obtained point. 0 iff every reference
/// point is matched exactly.
double igd(std::span<const std::vector<double>> obtained,
           std::span<const std::vector<double>> reference);

/// Exact hypervolume dominated by `points` relative to `ref_point`
/// (minimization). Points outside the reference box are discarded first.
/// Supports 2 and 3 objectives.
double hypervolume(std::span<const std::vector<double>> points,
                   std::span<const double> ref_point);

}  // namespace gpsaf
