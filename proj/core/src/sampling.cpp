#include "gpsaf/sampling.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

// One LHS draw in the unit box.
std::vector<std::vector<double>> unit_lhs(int n_points, int n_var, Rng& rng) {
  std::vector<std::vector<double>> pts(
      static_cast<std::size_t>(n_points),
      std::vector<double>(static_cast<std::size_t>(n_var)));
  std::vector<int> perm(static_cast<std::size_t>(n_points));
  for (int d = 0; d < n_var; ++d) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (int i = 0; i < n_points; ++i) {
      const double u = rng.uniform();
      pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
          (perm[static_cast<std::size_t>(i)] + u) / n_points;
    }
  }
  return pts;
}

double min_pairwise_distance_sq(const std::vector<std::vector<double>>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double d = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        const double diff = pts[i][k] - pts[j][k];
        d += diff * diff;
      }
      best = std::min(best, d);
    }
  }
  return best;
}

std::vector<std::vector<double>> scale_to_bounds(
    std::vector<std::vector<double>> pts, const Problem& problem) {
  for (auto& p : pts)
    for (int d = 0; d < problem.n_var; ++d) {
      const auto u = static_cast<std::size_t>(d);
      p[u] = problem.lower[u] + p[u] * (problem.upper[u] - problem.lower[u]);
    }
  return pts;
}

}  // namespace

std::vector<std::vector<double>> latin_hypercube(const Problem& problem,
                                                 int n_points, Rng& rng) {
  if (n_points < 1) throw ContractError("latin_hypercube: n_points < 1");
  return scale_to_bounds(unit_lhs(n_points, problem.n_var, rng), problem);
}

std::vector<std::vector<double>> sample_doe(const Problem& problem,
                                            int doe_size, Rng& rng) {
  if (doe_size < 1) throw ContractError("sample_doe: doe_size < 1");
  constexpr int kRestarts = 100;
  std::vector<std::vector<double>> best;
  double best_dist = -1.0;
  for (int r = 0; r < kRestarts; ++r) {
    auto candidate = unit_lhs(doe_size, problem.n_var, rng);
    const double d = min_pairwise_distance_sq(candidate);
    if (d > best_dist) {
      best_dist = d;
      best = std::move(candidate);
    }
  }
  return scale_to_bounds(std::move(best), problem);
}

}  // namespace gpsaf
