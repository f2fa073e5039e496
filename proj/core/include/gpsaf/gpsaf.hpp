#pragma once

#include <functional>
#include <optional>

#include "gpsaf/algorithm.hpp"
#include "gpsaf/ensemble.hpp"
#include "gpsaf/metrics.hpp"

namespace gpsaf {

struct GpsafConfig {
  int alpha = 30;     // tournament pressure: infill sets competing per slot
  int beta = 5;       // simulated look-ahead iterations on the surrogate
  double gamma = 0.5; // replacement probability exponent
  int doe_size = 20;
  int se_max = 300;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Batch predictor seam: maps designs to predicted objective/constraint
/// values. run_gpsaf wires this to SurrogateEnsemble::predict.
using Predictor =
    std::function<Predictions(std::span<const std::vector<double>>)>;

/// Per-iteration wrapper diagnostics, emitted after the batch was evaluated
/// and archived.
struct IterationTrace {
  int iteration = 0;
  int batch_size = 0;
  std::vector<int> cluster_sizes;
  std::vector<double> rho;
  std::vector<std::string> selected_models;
  std::vector<double> error;
};
using TraceSink = std::function<void(const IterationTrace&, const Archive&)>;

/// Tournament pre-filter: one infill set P gets predictions attached, then
/// alpha - 1 further infill sets challenge it slot by slot; a challenger
/// replaces the incumbent when predicted better (predicted ties resolved by
/// coin flip). The baseline is never advanced. With alpha = 1 (and a null
/// predictor) this reduces to a single raw infill call.
std::vector<Solution> alpha_phase(BaselineAlgorithm& baseline,
                                  const Predictor& predictor, int alpha,
                                  Rng& rng);

/// Surrogate look-ahead: a snapshot of the baseline, reseeded with its own
/// stream, runs `beta` infill/advance iterations evaluated only by the
/// predictor. Every simulated solution is assigned to the cluster of its
/// nearest plan slot (Euclidean distance on bounds-normalized designs).
/// The true baseline state is untouched.
std::vector<std::vector<Solution>> beta_phase(const BaselineAlgorithm& baseline,
                                              const Predictor& predictor,
                                              std::span<const Solution> plan,
                                              int beta, const Problem& problem,
                                              Rng beta_rng);

/// Probabilistic replacement: slot j swaps in the cluster winner V[j] with
/// probability rho_j = (|U_j| / max_j |U_j|)^gamma; the densest cluster
/// always replaces, empty clusters never do. Returns the rho values
/// (0 for empty clusters).
std::vector<double> replacement_phase(
    std::vector<Solution>& plan, std::span<const std::vector<Solution>> clusters,
    std::span<const std::optional<Solution>> winners, double gamma, Rng& rng);

/// The full wrapper: DOE seeding (the baseline's own space-filling first
/// infill when its size matches doe_size, an independent maximin sample
/// otherwise), then per iteration surrogate fit, alpha and beta phases,
/// per-cluster knockout tournaments, probabilistic replacement, expensive
/// evaluation and error tracking, until exactly se_max evaluations are spent.
/// With alpha = 1 and beta = 0 all surrogate machinery is bypassed and the
/// evaluated design sequence is identical to run_baseline under the same
/// seed.
Archive run_gpsaf(BaselineAlgorithm& baseline,
                  std::shared_ptr<const Problem> problem,
                  const GpsafConfig& config, const TraceSink& trace = nullptr);

}  // namespace gpsaf
