#include "gpsaf/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

// 2-D dominated area for points already inside the reference box.
double area_2d(std::vector<std::pair<double, double>> pts, double rx, double ry) {
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double best_y = std::numeric_limits<double>::infinity();
  // Sweep x ascending; only points improving y contribute a new strip.
  std::vector<std::pair<double, double>> staircase;
  for (const auto& [x, y] : pts)
    if (y < best_y) {
      staircase.emplace_back(x, y);
      best_y = y;
    }
  for (std::size_t i = 0; i < staircase.size(); ++i) {
    const double next_x = i + 1 < staircase.size() ? staircase[i + 1].first : rx;
    area += (next_x - staircase[i].first) * (ry - staircase[i].second);
  }
  return area;
}

}  // namespace

double igd(std::span<const std::vector<double>> obtained,
           std::span<const std::vector<double>> reference) {
  if (obtained.empty() || reference.empty())
    throw NumericError("igd: empty point set");
  const std::size_t dim = reference[0].size();
  for (const auto& p : obtained)
    if (p.size() != dim) throw ContractError("igd: objective dimension mismatch");

  double total = 0.0;
  for (const auto& r : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : obtained) {
      double d = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const double diff = p[k] - r[k];
        d += diff * diff;
      }
      best = std::min(best, d);
    }
    total += std::sqrt(best);
  }
  return total / static_cast<double>(reference.size());
}

double hypervolume(std::span<const std::vector<double>> points,
                   std::span<const double> ref_point) {
  const std::size_t dim = ref_point.size();
  if (dim != 2 && dim != 3)
    throw UnsupportedError("hypervolume supports 2 or 3 objectives");

  std::vector<std::vector<double>> inside;
  for (const auto& p : points) {
    if (p.size() != dim)
      throw ContractError("hypervolume: objective dimension mismatch");
    bool in_box = true;
    for (std::size_t k = 0; k < dim; ++k)
      if (p[k] > ref_point[k]) in_box = false;
    if (in_box) inside.push_back(p);
  }
  if (inside.empty()) return 0.0;

  if (dim == 2) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(inside.size());
    for (const auto& p : inside) pts.emplace_back(p[0], p[1]);
    return area_2d(std::move(pts), ref_point[0], ref_point[1]);
  }

  // Dimension sweep over f3 slices: between consecutive z levels the
  // dominated region is a constant 2-D staircase.
  std::sort(inside.begin(), inside.end(),
            [](const auto& a, const auto& b) { return a[2] < b[2]; });
  double volume = 0.0;
  std::vector<std::pair<double, double>> active;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    active.emplace_back(inside[i][0], inside[i][1]);
    const double z_lo = inside[i][2];
    const double z_hi = i + 1 < inside.size() ? inside[i + 1][2] : ref_point[2];
    if (z_hi > z_lo)
      volume += area_2d(active, ref_point[0], ref_point[1]) * (z_hi - z_lo);
  }
  return volume;
}

}  // namespace gpsaf
