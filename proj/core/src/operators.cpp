#include "gpsaf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

constexpr double kEps = 1e-14;

double sbx_child(double y1, double y2, double lo, double hi, double eta,
                 double u, bool lower_child) {
  // Bounded SBX spread factor (Deb & Agrawal).
  const double dy = y2 - y1;
  const double beta =
      lower_child ? 1.0 + 2.0 * (y1 - lo) / dy : 1.0 + 2.0 * (hi - y2) / dy;
  const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
  double betaq;
  if (u <= 1.0 / alpha)
    betaq = std::pow(u * alpha, 1.0 / (eta + 1.0));
  else
    betaq = std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
  const double c = lower_child ? 0.5 * ((y1 + y2) - betaq * dy)
                               : 0.5 * ((y1 + y2) + betaq * dy);
  return std::clamp(c, lo, hi);
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> p1, std::span<const double> p2,
    const Problem& problem, double eta, double prob, Rng& rng) {
  std::vector<double> c1(p1.begin(), p1.end());
  std::vector<double> c2(p2.begin(), p2.end());
  if (rng.uniform() > prob) return {std::move(c1), std::move(c2)};

  for (int d = 0; d < problem.n_var; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (rng.uniform() > 0.5) continue;
    if (std::abs(p1[i] - p2[i]) <= kEps) continue;
    const double y1 = std::min(p1[i], p2[i]);
    const double y2 = std::max(p1[i], p2[i]);
    const double lo = problem.lower[i];
    const double hi = problem.upper[i];
    const double u = rng.uniform();
    double lo_child = sbx_child(y1, y2, lo, hi, eta, u, true);
    double hi_child = sbx_child(y1, y2, lo, hi, eta, u, false);
    if (rng.uniform() < 0.5) std::swap(lo_child, hi_child);
    c1[i] = lo_child;
    c2[i] = hi_child;
  }
  return {std::move(c1), std::move(c2)};
}

void polynomial_mutation(std::vector<double>& x, const Problem& problem,
                         double eta, double prob, Rng& rng) {
  for (int d = 0; d < problem.n_var; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (rng.uniform() > prob) continue;
    const double lo = problem.lower[i];
    const double hi = problem.upper[i];
    const double range = hi - lo;
    const double u = rng.uniform();
    const double d1 = (x[i] - lo) / range;
    const double d2 = (hi - x[i]) / range;
    double deltaq;
    if (u < 0.5) {
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
      deltaq = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
    } else {
      const double val =
          2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
      deltaq = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
    }
    x[i] = std::clamp(x[i] + deltaq * range, lo, hi);
  }
}

std::size_t tournament_select(std::span<const Solution> population, int k,
                              Rng& rng) {
  if (population.empty()) throw ContractError("tournament on empty population");
  const int n = static_cast<int>(population.size());
  auto champion = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  for (int round = 1; round < k; ++round) {
    const auto challenger = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    switch (compare(population[challenger], population[champion], false)) {
      case Ordering::A_WINS:
        champion = challenger;
        break;
      case Ordering::B_WINS:
        break;
      case Ordering::TIE:
        if (rng.uniform() < 0.5) champion = challenger;
        break;
    }
  }
  return champion;
}

bool better_single_objective(const Solution& a, const Solution& b) {
  const double cva = violation(a, false);
  const double cvb = violation(b, false);
  const bool fa = cva == 0.0;
  const bool fb = cvb == 0.0;
  if (fa != fb) return fa;
  if (!fa) return cva < cvb;
  return (*a.f)[0] < (*b.f)[0];
}

std::vector<std::vector<std::size_t>> nondominated_sort(
    std::span<const std::vector<double>> objectives) {
  const std::size_t n = objectives.size();
  std::vector<int> dominated_by(n, 0);
  std::vector<std::vector<std::size_t>> dominates_list(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j])) {
        dominates_list[i].push_back(j);
        ++dominated_by[j];
      } else if (dominates(objectives[j], objectives[i])) {
        dominates_list[j].push_back(i);
        ++dominated_by[i];
      }
    }
  }
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (dominated_by[i] == 0) current.push_back(i);
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (const std::size_t i : current)
      for (const std::size_t j : dominates_list[i])
        if (--dominated_by[j] == 0) next.push_back(j);
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<std::size_t> nondominated_filter(
    std::span<const std::vector<double>> objectives) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    bool is_dominated = false;
    for (std::size_t j = 0; j < objectives.size() && !is_dominated; ++j)
      if (j != i && dominates(objectives[j], objectives[i])) is_dominated = true;
    if (!is_dominated) keep.push_back(i);
  }
  return keep;
}

std::vector<double> crowding_distance(
    std::span<const std::vector<double>> objectives,
    std::span<const std::size_t> front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(),
              std::numeric_limits<double>::infinity());
    return dist;
  }
  const std::size_t n_obj = objectives[front[0]].size();
  std::vector<std::size_t> order(n);
  for (std::size_t m = 0; m < n_obj; ++m) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return objectives[front[a]][m] < objectives[front[b]][m];
                     });
    const double fmin = objectives[front[order.front()]][m];
    const double fmax = objectives[front[order.back()]][m];
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    if (fmax - fmin <= kEps) continue;
    for (std::size_t i = 1; i + 1 < n; ++i)
      dist[order[i]] += (objectives[front[order[i + 1]]][m] -
                         objectives[front[order[i - 1]]][m]) /
                        (fmax - fmin);
  }
  return dist;
}

}  // namespace gpsaf
