#include "gpsaf/pkt.hpp"

#include <algorithm>
#include <numeric>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

// Perturbed copy of the predicted values; draws one normal per function.
Solution perturb(const Solution& s, const ErrorEstimate& e, int n_obj, Rng& rng) {
  Solution out;
  out.x = s.x;
  std::vector<double> f(s.f_hat->size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double sigma = e.value(static_cast<int>(i));
    if (sigma < 0.0) throw NumericError("compare_noisy: negative error scale");
    f[i] = (*s.f_hat)[i] + rng.normal(sigma);
  }
  std::vector<double> g(s.g_hat ? s.g_hat->size() : 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double sigma = e.value(n_obj + static_cast<int>(j));
    if (sigma < 0.0) throw NumericError("compare_noisy: negative error scale");
    g[j] = (*s.g_hat)[j] + rng.normal(sigma);
  }
  out.f_hat = std::move(f);
  out.g_hat = std::move(g);
  return out;
}

}  // namespace

Ordering compare_noisy(const Solution& a, const Solution& b,
                       const ErrorEstimate& e, Rng& rng) {
  if (!a.f_hat || !b.f_hat)
    throw MissingValuesError("compare_noisy: predicted values required");
  const int n_obj = static_cast<int>(a.f_hat->size());
  const Solution pa = perturb(a, e, n_obj, rng);
  const Solution pb = perturb(b, e, n_obj, rng);
  const Ordering r = compare(pa, pb, true);
  if (r != Ordering::TIE) return r;
  return rng.uniform() < 0.5 ? Ordering::A_WINS : Ordering::B_WINS;
}

std::vector<std::size_t> knockout_rounds(std::span<const Solution> candidates,
                                         std::span<const std::size_t> order,
                                         const ErrorEstimate& e, int k,
                                         Rng& rng) {
  if (k < 1) throw ConfigError("knockout: k < 1");
  std::vector<std::size_t> current(order.begin(), order.end());

  std::vector<std::size_t> previous;
  while (static_cast<int>(current.size()) > k) {
    if (current.size() % 2 != 0) {
      // A random participant competes twice this round.
      const auto extra = current[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(current.size()) - 1))];
      current.push_back(extra);
    }
    previous = current;
    std::vector<std::size_t> winners;
    winners.reserve(current.size() / 2);
    for (std::size_t i = 0; i + 1 < current.size(); i += 2) {
      const std::size_t a = current[i];
      const std::size_t b = current[i + 1];
      std::size_t w = a;
      if (a != b)
        w = compare_noisy(candidates[a], candidates[b], e, rng) == Ordering::A_WINS
                ? a
                : b;
      if (std::find(winners.begin(), winners.end(), w) == winners.end())
        winners.push_back(w);
    }
    current = std::move(winners);
  }

  if (static_cast<int>(current.size()) < k && !previous.empty()) {
    // Too many were eliminated by the last halving: re-admit random losers
    // of the previous round (without replacement).
    std::vector<std::size_t> losers;
    for (const std::size_t idx : previous)
      if (std::find(current.begin(), current.end(), idx) == current.end() &&
          std::find(losers.begin(), losers.end(), idx) == losers.end())
        losers.push_back(idx);
    rng.shuffle(losers);
    for (const std::size_t idx : losers) {
      if (static_cast<int>(current.size()) >= k) break;
      current.push_back(idx);
    }
  }
  return current;
}

std::vector<Solution> prob_knockout_tournament(
    std::span<const Solution> candidates, const ErrorEstimate& e, int k,
    Rng& rng) {
  if (k < 1) throw ConfigError("pkt: k < 1");
  if (candidates.empty()) throw ContractError("pkt: empty candidate set");
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  const auto winners = knockout_rounds(candidates, order, e, k, rng);
  std::vector<Solution> out;
  out.reserve(winners.size());
  for (const std::size_t idx : winners) out.push_back(candidates[idx]);
  return out;
}

}  // namespace gpsaf
