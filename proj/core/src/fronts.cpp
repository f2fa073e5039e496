#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "gpsaf/compare.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/problems.hpp"

namespace gpsaf {

namespace detail {
// Generated at build time from core/data/fronts/*.csv.
const std::map<std::string, std::string>& embedded_fronts();
}  // namespace detail

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest attainable f1 on the ZDT6 front.
constexpr double kZdt6F1Min = 0.2807753191;

std::string lower_name(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

using PointSet = std::vector<std::vector<double>>;

/// Deterministic spread-preserving reduction to exactly n points:
/// lexicographic seed, then greedy farthest-point selection.
PointSet thin_to(PointSet points, int n) {
  const int have = static_cast<int>(points.size());
  if (have < n)
    throw UnsupportedError("reference front has only " + std::to_string(have) +
                           " points, " + std::to_string(n) + " requested");
  if (have == n) return points;
  std::sort(points.begin(), points.end());
  std::vector<double> min_dist(points.size(),
                               std::numeric_limits<double>::infinity());
  std::vector<bool> taken(points.size(), false);
  PointSet out;
  std::size_t current = 0;
  for (int k = 0; k < n; ++k) {
    taken[current] = true;
    out.push_back(points[current]);
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (taken[i]) continue;
      double d = 0.0;
      for (std::size_t j = 0; j < points[i].size(); ++j) {
        const double diff = points[i][j] - points[current][j];
        d += diff * diff;
      }
      min_dist[i] = std::min(min_dist[i], d);
      if (min_dist[i] > best_dist) {
        best_dist = min_dist[i];
        best = i;
      }
    }
    current = best;
  }
  return out;
}

PointSet zdt_front(int variant, int n) {
  PointSet out;
  if (variant == 3) {
    // Non-dominated f1 intervals of the disconnected ZDT3 front.
    static constexpr double regions[5][2] = {
        {0.0000000000, 0.0830015349},
        {0.1822287280, 0.2577623634},
        {0.4093136748, 0.4538821041},
        {0.6183967944, 0.6525117038},
        {0.8233317983, 0.8518328654}};
    double total = 0.0;
    for (const auto& r : regions) total += r[1] - r[0];
    for (const double pos : linspace(0.0, total, n)) {
      double offset = pos;
      double f1 = regions[4][1];
      for (const auto& r : regions) {
        const double len = r[1] - r[0];
        if (offset <= len) {
          f1 = r[0] + offset;
          break;
        }
        offset -= len;
      }
      out.push_back({f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * kPi * f1)});
    }
    return out;
  }
  const double f1_lo = variant == 6 ? kZdt6F1Min : 0.0;
  for (const double f1 : linspace(f1_lo, 1.0, n)) {
    const double f2 = (variant == 2 || variant == 6) ? 1.0 - f1 * f1
                                                     : 1.0 - std::sqrt(f1);
    out.push_back({f1, f2});
  }
  return out;
}

// Das-Dennis simplex weights for three objectives with the smallest number
// of divisions producing at least n points.
PointSet simplex_weights(int n) {
  int h = 1;
  while ((h + 1) * (h + 2) / 2 < n) ++h;
  PointSet pts;
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= h - i; ++j)
      pts.push_back({static_cast<double>(i) / h, static_cast<double>(j) / h,
                     static_cast<double>(h - i - j) / h});
  return pts;
}

PointSet dtlz_front(int variant, int n) {
  switch (variant) {
    case 1: {
      PointSet pts = simplex_weights(n);
      for (auto& p : pts)
        for (auto& v : p) v *= 0.5;
      return thin_to(std::move(pts), n);
    }
    case 2:
    case 3:
    case 4: {
      PointSet pts = simplex_weights(n);
      for (auto& p : pts) {
        double norm = 0.0;
        for (const double v : p) norm += v * v;
        norm = std::sqrt(norm);
        for (auto& v : p) v /= norm;
      }
      return thin_to(std::move(pts), n);
    }
    case 5:
    case 6: {
      PointSet out;
      const double c = std::cos(kPi / 4.0);
      const double s = std::sin(kPi / 4.0);
      for (const double t : linspace(0.0, kPi / 2.0, n))
        out.push_back({std::cos(t) * c, std::cos(t) * s, std::sin(t)});
      return out;
    }
    case 7: {
      // Dense grid over the position variables with g = 0, then keep the
      // non-dominated subset of the disconnected surface.
      const int grid = std::max(40, static_cast<int>(std::ceil(std::sqrt(8.0 * n))));
      PointSet pts;
      for (const double f1 : linspace(0.0, 1.0, grid))
        for (const double f2 : linspace(0.0, 1.0, grid)) {
          const double h = 3.0 -
                           f1 / 2.0 * (1.0 + std::sin(3.0 * kPi * f1)) -
                           f2 / 2.0 * (1.0 + std::sin(3.0 * kPi * f2));
          pts.push_back({f1, f2, 2.0 * h});
        }
      PointSet nd;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
          if (j != i && dominates(pts[j], pts[i])) dominated = true;
        if (!dominated) nd.push_back(pts[i]);
      }
      return thin_to(std::move(nd), n);
    }
    default:
      throw UnsupportedError("no analytic front for dtlz variant");
  }
}

PointSet c2_dtlz2_front(int n) {
  const double r = 0.4;
  const double c = 1.0 / std::sqrt(3.0);
  PointSet sphere = simplex_weights(8 * n);
  for (auto& p : sphere) {
    double norm = 0.0;
    for (const double v : p) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : p) v /= norm;
  }
  PointSet feasible;
  for (const auto& p : sphere) {
    double near_axis = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i) {
      double d = -r * r;
      for (std::size_t j = 0; j < 3; ++j) {
        const double t = j == i ? p[j] - 1.0 : p[j];
        d += t * t;
      }
      near_axis = std::min(near_axis, d);
    }
    double near_center = -r * r;
    for (const double v : p) near_center += (v - c) * (v - c);
    if (std::min(near_axis, near_center) <= 0.0) feasible.push_back(p);
  }
  return thin_to(std::move(feasible), n);
}

PointSet parse_csv(const std::string& text) {
  PointSet out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> reference_front(const std::string& name,
                                                 int n_points) {
  if (n_points < 1) throw NumericError("reference_front: n_points < 1");
  const std::string key = lower_name(name);
  if (key == "zdt1" || key == "zdt4") return zdt_front(1, n_points);
  if (key == "zdt2") return zdt_front(2, n_points);
  if (key == "zdt3") return zdt_front(3, n_points);
  if (key == "zdt6") return zdt_front(6, n_points);
  if (key.starts_with("dtlz") && key.size() == 5 && key[4] >= '1' && key[4] <= '7')
    return dtlz_front(key[4] - '0', n_points);
  if (key == "c2-dtlz2") return c2_dtlz2_front(n_points);
  const auto& stored = detail::embedded_fronts();
  if (const auto it = stored.find(key); it != stored.end())
    return thin_to(parse_csv(it->second), n_points);
  throw UnsupportedError("no reference front available for '" + name + "'");
}

}  // namespace gpsaf
