#include "gpsaf/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

constexpr double kPi = std::numbers::pi;

std::string lower_name(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

Problem scalable(const std::string& name, int n_var, double lo, double hi,
                 std::function<double(std::span<const double>)> fn) {
  Problem p;
  p.name = name;
  p.n_var = n_var;
  p.n_obj = 1;
  p.n_constr = 0;
  p.lower.assign(static_cast<std::size_t>(n_var), lo);
  p.upper.assign(static_cast<std::size_t>(n_var), hi);
  p.known_optimum = 0.0;
  p.eval = [fn = std::move(fn)](std::span<const double> x, std::span<double> f,
                                std::span<double>) { f[0] = fn(x); };
  return p;
}

double sphere_fn(std::span<const double> x) {
  double s = 0.0;
  for (const double v : x) s += v * v;
  return s;
}

double rastrigin_fn(std::span<const double> x) {
  double s = 10.0 * static_cast<double>(x.size());
  for (const double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return s;
}

double rosenbrock_fn(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double ackley_fn(std::span<const double> x) {
  const auto n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (const double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
         std::numbers::e;
}

double griewank_fn(std::span<const double> x) {
  double sq = 0.0, pr = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq += x[i] * x[i];
    pr *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sq / 4000.0 - pr + 1.0;
}

Problem fixed(const std::string& name, std::vector<double> lo,
              std::vector<double> hi, int n_obj, int n_constr,
              decltype(Problem::eval) eval) {
  Problem p;
  p.name = name;
  p.n_var = static_cast<int>(lo.size());
  p.n_obj = n_obj;
  p.n_constr = n_constr;
  p.lower = std::move(lo);
  p.upper = std::move(hi);
  p.eval = std::move(eval);
  return p;
}

// ---------------------------------------------------------------------------
// G-function benchmark, inequality-constrained instances.
// ---------------------------------------------------------------------------

Problem make_g1() {
  std::vector<double> lo(13, 0.0);
  std::vector<double> hi(13, 1.0);
  for (int i = 9; i < 12; ++i) hi[static_cast<std::size_t>(i)] = 100.0;
  auto p = fixed("G1", std::move(lo), std::move(hi), 1, 9,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   double s1 = 0.0, s2 = 0.0, s3 = 0.0;
                   for (int i = 0; i < 4; ++i) {
                     s1 += x[static_cast<std::size_t>(i)];
                     s2 += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
                   }
                   for (int i = 4; i < 13; ++i) s3 += x[static_cast<std::size_t>(i)];
                   f[0] = 5.0 * s1 - 5.0 * s2 - s3;
                   g[0] = 2.0 * x[0] + 2.0 * x[1] + x[9] + x[10] - 10.0;
                   g[1] = 2.0 * x[0] + 2.0 * x[2] + x[9] + x[11] - 10.0;
                   g[2] = 2.0 * x[1] + 2.0 * x[2] + x[10] + x[11] - 10.0;
                   g[3] = -8.0 * x[0] + x[9];
                   g[4] = -8.0 * x[1] + x[10];
                   g[5] = -8.0 * x[2] + x[11];
                   g[6] = -2.0 * x[3] - x[4] + x[9];
                   g[7] = -2.0 * x[5] - x[6] + x[10];
                   g[8] = -2.0 * x[7] - x[8] + x[11];
                 });
  p.known_optimum = -15.0;
  return p;
}

Problem make_g4() {
  auto p = fixed("G4", {78.0, 33.0, 27.0, 27.0, 27.0},
                 {102.0, 45.0, 45.0, 45.0, 45.0}, 1, 6,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] +
                          37.293239 * x[0] - 40792.141;
                   const double u = 85.334407 + 0.0056858 * x[1] * x[4] +
                                    0.0006262 * x[0] * x[3] -
                                    0.0022053 * x[2] * x[4];
                   const double v = 80.51249 + 0.0071317 * x[1] * x[4] +
                                    0.0029955 * x[0] * x[1] +
                                    0.0021813 * x[2] * x[2];
                   const double w = 9.300961 + 0.0047026 * x[2] * x[4] +
                                    0.0012547 * x[0] * x[2] +
                                    0.0019085 * x[2] * x[3];
                   g[0] = u - 92.0;
                   g[1] = -u;
                   g[2] = v - 110.0;
                   g[3] = -v + 90.0;
                   g[4] = w - 25.0;
                   g[5] = -w + 20.0;
                 });
  p.known_optimum = -30665.5386717834;
  return p;
}

Problem make_g6() {
  auto p = fixed("G6", {13.0, 0.0}, {100.0, 100.0}, 1, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = std::pow(x[0] - 10.0, 3) + std::pow(x[1] - 20.0, 3);
                   g[0] = -(x[0] - 5.0) * (x[0] - 5.0) -
                          (x[1] - 5.0) * (x[1] - 5.0) + 100.0;
                   g[1] = (x[0] - 6.0) * (x[0] - 6.0) +
                          (x[1] - 5.0) * (x[1] - 5.0) - 82.81;
                 });
  p.known_optimum = -6961.81387558015;
  return p;
}

Problem make_g7() {
  auto p = fixed("G7", std::vector<double>(10, -10.0),
                 std::vector<double>(10, 10.0), 1, 8,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] -
                          16.0 * x[1] + (x[2] - 10.0) * (x[2] - 10.0) +
                          4.0 * (x[3] - 5.0) * (x[3] - 5.0) +
                          (x[4] - 3.0) * (x[4] - 3.0) +
                          2.0 * (x[5] - 1.0) * (x[5] - 1.0) + 5.0 * x[6] * x[6] +
                          7.0 * (x[7] - 11.0) * (x[7] - 11.0) +
                          2.0 * (x[8] - 10.0) * (x[8] - 10.0) +
                          (x[9] - 7.0) * (x[9] - 7.0) + 45.0;
                   g[0] = -105.0 + 4.0 * x[0] + 5.0 * x[1] - 3.0 * x[6] + 9.0 * x[7];
                   g[1] = 10.0 * x[0] - 8.0 * x[1] - 17.0 * x[6] + 2.0 * x[7];
                   g[2] = -8.0 * x[0] + 2.0 * x[1] + 5.0 * x[8] - 2.0 * x[9] - 12.0;
                   g[3] = 3.0 * (x[0] - 2.0) * (x[0] - 2.0) +
                          4.0 * (x[1] - 3.0) * (x[1] - 3.0) + 2.0 * x[2] * x[2] -
                          7.0 * x[3] - 120.0;
                   g[4] = 5.0 * x[0] * x[0] + 8.0 * x[1] +
                          (x[2] - 6.0) * (x[2] - 6.0) - 2.0 * x[3] - 40.0;
                   g[5] = x[0] * x[0] + 2.0 * (x[1] - 2.0) * (x[1] - 2.0) -
                          2.0 * x[0] * x[1] + 14.0 * x[4] - 6.0 * x[5];
                   g[6] = 0.5 * (x[0] - 8.0) * (x[0] - 8.0) +
                          2.0 * (x[1] - 4.0) * (x[1] - 4.0) + 3.0 * x[4] * x[4] -
                          x[5] - 30.0;
                   g[7] = -3.0 * x[0] + 6.0 * x[1] +
                          12.0 * (x[8] - 8.0) * (x[8] - 8.0) - 7.0 * x[9];
                 });
  p.known_optimum = 24.30620906818;
  return p;
}

Problem make_g8() {
  auto p = fixed("G8", {0.0, 0.0}, {10.0, 10.0}, 1, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   const double s1 = std::sin(2.0 * kPi * x[0]);
                   const double s2 = std::sin(2.0 * kPi * x[1]);
                   f[0] = -(s1 * s1 * s1 * s2) /
                          (x[0] * x[0] * x[0] * (x[0] + x[1]));
                   g[0] = x[0] * x[0] - x[1] + 1.0;
                   g[1] = 1.0 - x[0] + (x[1] - 4.0) * (x[1] - 4.0);
                 });
  p.known_optimum = -0.0958250414180359;
  return p;
}

Problem make_g9() {
  auto p = fixed("G9", std::vector<double>(7, -10.0),
                 std::vector<double>(7, 10.0), 1, 4,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = (x[0] - 10.0) * (x[0] - 10.0) +
                          5.0 * (x[1] - 12.0) * (x[1] - 12.0) +
                          std::pow(x[2], 4) + 3.0 * (x[3] - 11.0) * (x[3] - 11.0) +
                          10.0 * std::pow(x[4], 6) + 7.0 * x[5] * x[5] +
                          std::pow(x[6], 4) - 4.0 * x[5] * x[6] - 10.0 * x[5] -
                          8.0 * x[6];
                   g[0] = -127.0 + 2.0 * x[0] * x[0] + 3.0 * std::pow(x[1], 4) +
                          x[2] + 4.0 * x[3] * x[3] + 5.0 * x[4];
                   g[1] = -282.0 + 7.0 * x[0] + 3.0 * x[1] + 10.0 * x[2] * x[2] +
                          x[3] - x[4];
                   g[2] = -196.0 + 23.0 * x[0] + x[1] * x[1] + 6.0 * x[5] * x[5] -
                          8.0 * x[6];
                   g[3] = 4.0 * x[0] * x[0] + x[1] * x[1] - 3.0 * x[0] * x[1] +
                          2.0 * x[2] * x[2] + 5.0 * x[5] - 11.0 * x[6];
                 });
  p.known_optimum = 680.630057374402;
  return p;
}

Problem make_g24() {
  auto p = fixed("G24", {0.0, 0.0}, {3.0, 4.0}, 1, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = -x[0] - x[1];
                   g[0] = -2.0 * std::pow(x[0], 4) + 8.0 * std::pow(x[0], 3) -
                          8.0 * x[0] * x[0] + x[1] - 2.0;
                   g[1] = -4.0 * std::pow(x[0], 4) + 32.0 * std::pow(x[0], 3) -
                          88.0 * x[0] * x[0] + 96.0 * x[0] + x[1] - 36.0;
                 });
  p.known_optimum = -5.50801327159536;
  return p;
}

// ---------------------------------------------------------------------------
// ZDT family (bi-objective).
// ---------------------------------------------------------------------------

Problem make_zdt(int variant, int n_var) {
  Problem p;
  p.name = "ZDT" + std::to_string(variant);
  p.n_var = n_var;
  p.n_obj = 2;
  p.n_constr = 0;
  p.lower.assign(static_cast<std::size_t>(n_var), 0.0);
  p.upper.assign(static_cast<std::size_t>(n_var), 1.0);
  if (variant == 4)
    for (int i = 1; i < n_var; ++i) {
      p.lower[static_cast<std::size_t>(i)] = -5.0;
      p.upper[static_cast<std::size_t>(i)] = 5.0;
    }
  p.has_reference_front = true;
  p.eval = [variant, n_var](std::span<const double> x, std::span<double> f,
                            std::span<double>) {
    const auto tail = static_cast<double>(n_var - 1);
    switch (variant) {
      case 1:
      case 2:
      case 3: {
        double s = 0.0;
        for (int i = 1; i < n_var; ++i) s += x[static_cast<std::size_t>(i)];
        const double g = 1.0 + 9.0 * s / tail;
        f[0] = x[0];
        const double r = f[0] / g;
        if (variant == 1)
          f[1] = g * (1.0 - std::sqrt(r));
        else if (variant == 2)
          f[1] = g * (1.0 - r * r);
        else
          f[1] = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f[0]));
        break;
      }
      case 4: {
        double g = 1.0 + 10.0 * tail;
        for (int i = 1; i < n_var; ++i) {
          const double v = x[static_cast<std::size_t>(i)];
          g += v * v - 10.0 * std::cos(4.0 * kPi * v);
        }
        f[0] = x[0];
        f[1] = g * (1.0 - std::sqrt(f[0] / g));
        break;
      }
      case 6: {
        f[0] = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * kPi * x[0]), 6);
        double s = 0.0;
        for (int i = 1; i < n_var; ++i) s += x[static_cast<std::size_t>(i)];
        const double g = 1.0 + 9.0 * std::pow(s / tail, 0.25);
        const double r = f[0] / g;
        f[1] = g * (1.0 - r * r);
        break;
      }
      default:
        throw ConfigError("unsupported zdt variant");
    }
  };
  return p;
}

// ---------------------------------------------------------------------------
// DTLZ family (3 objectives here, per the fixed experiment setup).
// ---------------------------------------------------------------------------

constexpr int kDtlzObjectives = 3;

double dtlz_g1(std::span<const double> x, int first) {
  const auto k = static_cast<double>(x.size()) - first;
  double s = 0.0;
  for (std::size_t i = static_cast<std::size_t>(first); i < x.size(); ++i)
    s += (x[i] - 0.5) * (x[i] - 0.5) - std::cos(20.0 * kPi * (x[i] - 0.5));
  return 100.0 * (k + s);
}

double dtlz_g2(std::span<const double> x, int first) {
  double s = 0.0;
  for (std::size_t i = static_cast<std::size_t>(first); i < x.size(); ++i)
    s += (x[i] - 0.5) * (x[i] - 0.5);
  return s;
}

Problem make_dtlz(int variant, int n_var) {
  const int m = kDtlzObjectives;
  if (n_var < m) throw ConfigError("dtlz: n_var must be at least n_obj");
  Problem p;
  p.name = "DTLZ" + std::to_string(variant);
  p.n_var = n_var;
  p.n_obj = m;
  p.n_constr = 0;
  p.lower.assign(static_cast<std::size_t>(n_var), 0.0);
  p.upper.assign(static_cast<std::size_t>(n_var), 1.0);
  p.has_reference_front = true;
  p.eval = [variant, m](std::span<const double> x, std::span<double> f,
                        std::span<double>) {
    switch (variant) {
      case 1: {
        const double g = dtlz_g1(x, m - 1);
        for (int i = 0; i < m; ++i) {
          double v = 0.5 * (1.0 + g);
          for (int j = 0; j < m - 1 - i; ++j) v *= x[static_cast<std::size_t>(j)];
          if (i > 0) v *= 1.0 - x[static_cast<std::size_t>(m - 1 - i)];
          f[static_cast<std::size_t>(i)] = v;
        }
        break;
      }
      case 2:
      case 3:
      case 4: {
        const double g = variant == 3 ? dtlz_g1(x, m - 1) : dtlz_g2(x, m - 1);
        const double alpha = variant == 4 ? 100.0 : 1.0;
        for (int i = 0; i < m; ++i) {
          double v = 1.0 + g;
          for (int j = 0; j < m - 1 - i; ++j)
            v *= std::cos(std::pow(x[static_cast<std::size_t>(j)], alpha) * kPi / 2.0);
          if (i > 0)
            v *= std::sin(std::pow(x[static_cast<std::size_t>(m - 1 - i)], alpha) *
                          kPi / 2.0);
          f[static_cast<std::size_t>(i)] = v;
        }
        break;
      }
      case 5:
      case 6: {
        double g = 0.0;
        if (variant == 5) {
          g = dtlz_g2(x, m - 1);
        } else {
          for (std::size_t i = static_cast<std::size_t>(m - 1); i < x.size(); ++i)
            g += std::pow(x[i], 0.1);
        }
        std::vector<double> theta(static_cast<std::size_t>(m - 1));
        theta[0] = x[0] * kPi / 2.0;
        for (int i = 1; i < m - 1; ++i)
          theta[static_cast<std::size_t>(i)] =
              kPi / (4.0 * (1.0 + g)) *
              (1.0 + 2.0 * g * x[static_cast<std::size_t>(i)]);
        for (int i = 0; i < m; ++i) {
          double v = 1.0 + g;
          for (int j = 0; j < m - 1 - i; ++j) v *= std::cos(theta[static_cast<std::size_t>(j)]);
          if (i > 0) v *= std::sin(theta[static_cast<std::size_t>(m - 1 - i)]);
          f[static_cast<std::size_t>(i)] = v;
        }
        break;
      }
      case 7: {
        const auto k = static_cast<double>(x.size()) - (m - 1);
        double s = 0.0;
        for (std::size_t i = static_cast<std::size_t>(m - 1); i < x.size(); ++i)
          s += x[i];
        const double g = 1.0 + 9.0 * s / k;
        double h = static_cast<double>(m);
        for (int i = 0; i < m - 1; ++i) {
          f[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
          h -= f[static_cast<std::size_t>(i)] / (1.0 + g) *
               (1.0 + std::sin(3.0 * kPi * f[static_cast<std::size_t>(i)]));
        }
        f[static_cast<std::size_t>(m - 1)] = (1.0 + g) * h;
        break;
      }
      default:
        throw ConfigError("unsupported dtlz variant");
    }
  };
  return p;
}

Problem make_c2_dtlz2(int n_var) {
  Problem p = make_dtlz(2, n_var);
  p.name = "C2-DTLZ2";
  p.n_constr = 1;
  const int m = kDtlzObjectives;
  const double r = 0.4;
  p.eval = [base = make_dtlz(2, n_var), m, r](std::span<const double> x,
                                              std::span<double> f,
                                              std::span<double> g) {
    base.eval(x, f, {});
    // Feasible when F lies within r of one of the M axis points of the
    // sphere front or within r of its center point.
    double near_axis = std::numeric_limits<double>::infinity();
    double norm_sq = 0.0;
    for (int i = 0; i < m; ++i) norm_sq += f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(i)];
    for (int i = 0; i < m; ++i) {
      const double fi = f[static_cast<std::size_t>(i)];
      const double d = norm_sq - fi * fi + (fi - 1.0) * (fi - 1.0) - r * r;
      near_axis = std::min(near_axis, d);
    }
    const double c = 1.0 / std::sqrt(static_cast<double>(m));
    double near_center = -r * r;
    for (int i = 0; i < m; ++i)
      near_center += (f[static_cast<std::size_t>(i)] - c) * (f[static_cast<std::size_t>(i)] - c);
    g[0] = std::min(near_axis, near_center);
  };
  return p;
}

// ---------------------------------------------------------------------------
// Constrained bi-objective classics.
// ---------------------------------------------------------------------------

Problem make_bnh() {
  auto p = fixed("BNH", {0.0, 0.0}, {5.0, 3.0}, 2, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = 4.0 * x[0] * x[0] + 4.0 * x[1] * x[1];
                   f[1] = (x[0] - 5.0) * (x[0] - 5.0) +
                          (x[1] - 5.0) * (x[1] - 5.0);
                   g[0] = (x[0] - 5.0) * (x[0] - 5.0) + x[1] * x[1] - 25.0;
                   g[1] = 7.7 - (x[0] - 8.0) * (x[0] - 8.0) -
                          (x[1] + 3.0) * (x[1] + 3.0);
                 });
  p.has_reference_front = true;
  return p;
}

Problem make_srn() {
  auto p = fixed("SRN", {-20.0, -20.0}, {20.0, 20.0}, 2, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = 2.0 + (x[0] - 2.0) * (x[0] - 2.0) +
                          (x[1] - 1.0) * (x[1] - 1.0);
                   f[1] = 9.0 * x[0] - (x[1] - 1.0) * (x[1] - 1.0);
                   g[0] = x[0] * x[0] + x[1] * x[1] - 225.0;
                   g[1] = x[0] - 3.0 * x[1] + 10.0;
                 });
  p.has_reference_front = true;
  return p;
}

Problem make_tnk() {
  auto p = fixed("TNK", {0.0, 0.0}, {kPi, kPi}, 2, 2,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = x[0];
                   f[1] = x[1];
                   g[0] = -(x[0] * x[0] + x[1] * x[1] - 1.0 -
                            0.1 * std::cos(16.0 * std::atan2(x[0], x[1])));
                   g[1] = (x[0] - 0.5) * (x[0] - 0.5) +
                          (x[1] - 0.5) * (x[1] - 0.5) - 0.5;
                 });
  p.has_reference_front = true;
  return p;
}

Problem make_osy() {
  auto p = fixed("OSY", {0.0, 0.0, 1.0, 0.0, 1.0, 0.0},
                 {10.0, 10.0, 5.0, 6.0, 5.0, 10.0}, 2, 6,
                 [](std::span<const double> x, std::span<double> f,
                    std::span<double> g) {
                   f[0] = -(25.0 * (x[0] - 2.0) * (x[0] - 2.0) +
                            (x[1] - 2.0) * (x[1] - 2.0) +
                            (x[2] - 1.0) * (x[2] - 1.0) +
                            (x[3] - 4.0) * (x[3] - 4.0) +
                            (x[4] - 1.0) * (x[4] - 1.0));
                   f[1] = 0.0;
                   for (const double v : x) f[1] += v * v;
                   g[0] = -(x[0] + x[1] - 2.0);
                   g[1] = -(6.0 - x[0] - x[1]);
                   g[2] = -(2.0 - x[1] + x[0]);
                   g[3] = -(2.0 - x[0] + 3.0 * x[1]);
                   g[4] = -(4.0 - (x[2] - 3.0) * (x[2] - 3.0) - x[3]);
                   g[5] = -((x[4] - 3.0) * (x[4] - 3.0) + x[5] - 4.0);
                 });
  p.has_reference_front = true;
  return p;
}

int default_n_var(const std::string& key) {
  if (key == "zdt4") return 5;
  return 10;
}

}  // namespace

Problem make_problem(const std::string& name, int n_var) {
  const std::string key = lower_name(name);
  const bool scalable_family =
      key == "sphere" || key == "rastrigin" || key == "rosenbrock" ||
      key == "ackley" || key == "griewank" || key.starts_with("zdt") ||
      key.starts_with("dtlz") || key == "c2-dtlz2";
  if (!scalable_family && n_var != 0) {
    // Fixed-dimension problems take no override; make sure the name exists
    // first so unknown names report as such.
    Problem probe = make_problem(name, 0);
    if (probe.n_var != n_var)
      throw ConfigError("problem '" + name + "' has fixed dimension " +
                        std::to_string(probe.n_var));
    return probe;
  }
  const int n = n_var > 0 ? n_var : default_n_var(key);

  if (key == "sphere") return scalable("sphere", n, -5.12, 5.12, sphere_fn);
  if (key == "rastrigin") return scalable("rastrigin", n, -5.12, 5.12, rastrigin_fn);
  if (key == "rosenbrock")
    return scalable("rosenbrock", n, -2.048, 2.048, rosenbrock_fn);
  if (key == "ackley") return scalable("ackley", n, -32.768, 32.768, ackley_fn);
  if (key == "griewank") return scalable("griewank", n, -600.0, 600.0, griewank_fn);
  if (key == "g1") return make_g1();
  if (key == "g4") return make_g4();
  if (key == "g6") return make_g6();
  if (key == "g7") return make_g7();
  if (key == "g8") return make_g8();
  if (key == "g9") return make_g9();
  if (key == "g24") return make_g24();
  if (key == "zdt1") return make_zdt(1, n);
  if (key == "zdt2") return make_zdt(2, n);
  if (key == "zdt3") return make_zdt(3, n);
  if (key == "zdt4") return make_zdt(4, n);
  if (key == "zdt6") return make_zdt(6, n);
  if (key == "c2-dtlz2") return make_c2_dtlz2(n);
  if (key.starts_with("dtlz") && key.size() == 5 && key[4] >= '1' && key[4] <= '7')
    return make_dtlz(key[4] - '0', n);
  if (key == "bnh") return make_bnh();
  if (key == "srn") return make_srn();
  if (key == "tnk") return make_tnk();
  if (key == "osy") return make_osy();
  throw ConfigError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
  return {"sphere", "rastrigin", "rosenbrock", "ackley", "griewank",
          "G1",     "G4",        "G6",         "G7",     "G8",
          "G9",     "G24",       "ZDT1",       "ZDT2",   "ZDT3",
          "ZDT4",   "ZDT6",      "DTLZ1",      "DTLZ2",  "DTLZ3",
          "DTLZ4",  "DTLZ5",     "DTLZ6",      "DTLZ7",  "BNH",
          "SRN",    "TNK",       "OSY",        "C2-DTLZ2"};
}

}  // namespace gpsaf
