#include "gpsaf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

constexpr int kExactLimit = 22;

/// Midranks of the combined sample; x entries first.
std::vector<double> midranks(std::span<const double> x,
                             std::span<const double> y) {
  const std::size_t total = x.size() + y.size();
  std::vector<std::pair<double, std::size_t>> values;
  values.reserve(total);
  for (std::size_t i = 0; i < x.size(); ++i) values.emplace_back(x[i], i);
  for (std::size_t i = 0; i < y.size(); ++i) values.emplace_back(y[i], x.size() + i);
  std::sort(values.begin(), values.end());

  std::vector<double> ranks(total);
  std::size_t i = 0;
  while (i < total) {
    std::size_t j = i;
    while (j + 1 < total && values[j + 1].first == values[i].first) ++j;
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[values[k].second] = shared;
    i = j + 1;
  }
  return ranks;
}

/// P(rank sum of a random n-subset of {1..total} <= w), by counting subsets.
double exact_left_tail(int n, int total, int w) {
  const int max_sum = total * (total + 1) / 2;
  if (w >= max_sum) return 1.0;
  // count[k][s]: k-subsets of the items seen so far with rank sum s.
  std::vector<std::vector<double>> count(
      static_cast<std::size_t>(n) + 1,
      std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  count[0][0] = 1.0;
  for (int item = 1; item <= total; ++item)
    for (int k = std::min(n, item); k >= 1; --k)
      for (int s = max_sum; s >= item; --s)
        count[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] +=
            count[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - item)];

  double below = 0.0, all = 0.0;
  for (int s = 0; s <= max_sum; ++s) {
    const double c = count[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
    all += c;
    if (s <= w) below += c;
  }
  return below / all;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

WilcoxonResult wilcoxon_ranksum_less(std::span<const double> x,
                                     std::span<const double> y, double alpha) {
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  if (n < 2 || m < 2)
    throw ContractError("wilcoxon: both samples need at least two values");
  for (const double v : x)
    if (std::isnan(v)) throw NumericError("wilcoxon: NaN sample value");
  for (const double v : y)
    if (std::isnan(v)) throw NumericError("wilcoxon: NaN sample value");

  const int total = n + m;
  const auto ranks = midranks(x, y);
  double w = 0.0;
  for (int i = 0; i < n; ++i) w += ranks[static_cast<std::size_t>(i)];

  // Tie detection on the combined sample.
  std::vector<double> combined(x.begin(), x.end());
  combined.insert(combined.end(), y.begin(), y.end());
  std::sort(combined.begin(), combined.end());
  double tie_cubes = 0.0;
  bool has_ties = false;
  for (std::size_t i = 0; i < combined.size();) {
    std::size_t j = i;
    while (j + 1 < combined.size() && combined[j + 1] == combined[i]) ++j;
    const auto t = static_cast<double>(j - i + 1);
    if (t > 1.0) {
      has_ties = true;
      tie_cubes += t * t * t - t;
    }
    i = j + 1;
  }

  double p;
  if (!has_ties && total <= kExactLimit) {
    p = exact_left_tail(n, total, static_cast<int>(std::llround(w)));
  } else {
    const double mean = static_cast<double>(n) * (total + 1) / 2.0;
    const double var =
        static_cast<double>(n) * m / 12.0 *
        ((total + 1) - tie_cubes / (static_cast<double>(total) * (total - 1)));
    if (var <= 0.0) return {1.0, false};
    p = normal_cdf((w - mean + 0.5) / std::sqrt(var));
  }
  return {p, p < alpha};
}

DominationRanks domination_ranks(std::span<const std::vector<double>> samples,
                                 double alpha) {
  const std::size_t m = samples.size();
  if (m < 2) throw ContractError("domination_ranks: need at least two algorithms");

  std::vector<std::vector<double>> finite(m);
  std::vector<bool> failed(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (const double v : samples[i])
      if (std::isfinite(v)) finite[i].push_back(v);
    failed[i] = finite[i].size() < 2;
  }

  DominationRanks out;
  out.dominated_by.assign(m, 0);
  out.ranks.assign(m, 0.0);

  std::vector<std::size_t> ok;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < m; ++i) (failed[i] ? bad : ok).push_back(i);

  for (const std::size_t a : ok)
    for (const std::size_t b : ok) {
      if (a == b) continue;
      if (wilcoxon_ranksum_less(finite[b], finite[a], alpha).reject)
        ++out.dominated_by[a];
    }
  for (const std::size_t i : bad)
    out.dominated_by[i] = static_cast<int>(ok.size());

  // Sort the non-failed by domination count; equal counts share the average
  // of the positions they occupy. Failures take the trailing positions.
  std::vector<std::size_t> order = ok;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.dominated_by[a] < out.dominated_by[b];
  });
  std::size_t pos = 0;
  while (pos < order.size()) {
    std::size_t end = pos;
    while (end + 1 < order.size() &&
           out.dominated_by[order[end + 1]] == out.dominated_by[order[pos]])
      ++end;
    const double avg = (static_cast<double>(pos + 1) + static_cast<double>(end + 1)) / 2.0;
    for (std::size_t k = pos; k <= end; ++k) out.ranks[order[k]] = avg;
    pos = end + 1;
  }
  if (!bad.empty()) {
    const double first = static_cast<double>(ok.size()) + 1.0;
    const double last = static_cast<double>(m);
    const double avg = (first + last) / 2.0;
    for (const std::size_t i : bad) out.ranks[i] = avg;
  }
  return out;
}

}  // namespace gpsaf
