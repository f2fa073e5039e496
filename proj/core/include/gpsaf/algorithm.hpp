#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpsaf/rng.hpp"
#include "gpsaf/types.hpp"

namespace gpsaf {

/// The two-method contract every population-based algorithm implements:
/// propose a batch of designs (infill), then ingest their evaluations
/// (advance). Also known as the ask/tell interface.
///
/// Contract requirements:
///   - a fresh instance's first infill() is its space-filling initial
///     population; later calls propose offspring,
///   - repeated infill() calls without an advance() in between draw fresh
///     randomness and may return different sets,
///   - advance() accepts any evaluated design set, not only the most recent
///     infill output (designs may have been modified by a wrapper),
///   - snapshot() yields an independent deep copy: mutating the copy never
///     affects the original.
class BaselineAlgorithm {
 public:
  virtual ~BaselineAlgorithm() = default;

  /// Binds the algorithm to a problem and seeds its private random stream.
  /// Discards any previous state.
  virtual void reset(std::shared_ptr<const Problem> problem, Rng rng) = 0;

  /// Proposes designs to evaluate, all inside the box bounds.
  virtual std::vector<std::vector<double>> infill() = 0;

  /// Ingests evaluated solutions (true or, for a simulated copy, predicted
  /// values in the f/g slots).
  virtual void advance(std::span<const Solution> evaluated) = 0;

  /// Independent deep copy, including the random stream state.
  virtual std::unique_ptr<BaselineAlgorithm> snapshot() const = 0;

  /// Replaces the private random stream; used when a snapshot must draw from
  /// a different stream than the original.
  virtual void reseed(Rng rng) = 0;

  virtual std::string name() const = 0;
};

/// Runs the plain infill/evaluate/advance loop until the budget is spent.
/// The final batch is truncated (first slots kept) so `used` never exceeds
/// the cap. Returns the archive of all evaluated solutions, in order.
Archive run_baseline(BaselineAlgorithm& algorithm,
                     std::shared_ptr<const Problem> problem, Budget budget,
                     std::uint64_t seed);

/// Evaluates designs on the problem (clamping to bounds first) and returns
/// them as solutions with true values attached.
std::vector<Solution> evaluate_designs(const Problem& problem,
                                       std::span<const std::vector<double>> designs);

}  // namespace gpsaf
