// Regenerates the precomputed reference fronts shipped in core/data/fronts.
//
// The constrained bi-objective classics have no closed-form front, so each
// one is approximated by merging a dense feasible sample of the design space
// with the archive of a long NSGA-II run, keeping the non-dominated subset
// and thinning it to a fixed count with a farthest-point pass.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <vector>

#include "gpsaf/algorithm.hpp"
#include "gpsaf/compare.hpp"
#include "gpsaf/nsga2.hpp"
#include "gpsaf/problems.hpp"
#include "gpsaf/rng.hpp"

using namespace gpsaf;

namespace {

using PointSet = std::vector<std::vector<double>>;

PointSet nondominated_2d(PointSet pts) {
  std::sort(pts.begin(), pts.end());
  PointSet nd;
  double best_f2 = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    if (p[1] < best_f2) {
      nd.push_back(p);
      best_f2 = p[1];
    }
  }
  return nd;
}

PointSet thin(PointSet pts, std::size_t n) {
  if (pts.size() <= n) return pts;
  std::sort(pts.begin(), pts.end());
  std::vector<double> min_dist(pts.size(), std::numeric_limits<double>::infinity());
  std::vector<bool> taken(pts.size(), false);
  PointSet out;
  std::size_t current = 0;
  while (out.size() < n) {
    taken[current] = true;
    out.push_back(pts[current]);
    std::size_t best = 0;
    double best_d = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (taken[i]) continue;
      double d = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        const double diff = pts[i][k] - pts[current][k];
        d += diff * diff;
      }
      min_dist[i] = std::min(min_dist[i], d);
      if (min_dist[i] > best_d) {
        best_d = min_dist[i];
        best = i;
      }
    }
    current = best;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet approximate_front(const std::string& name, int samples, int budget,
                           std::uint64_t seed) {
  auto problem = std::make_shared<const Problem>(make_problem(name));
  PointSet feasible;

  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(problem->n_var));
  if (problem->n_var == 2) {
    // A regular grid resolves thin constrained fronts much better than
    // random sampling at the same evaluation count.
    const int grid = static_cast<int>(std::sqrt(static_cast<double>(samples)));
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        x[0] = problem->lower[0] +
               (i + 0.5) / grid * (problem->upper[0] - problem->lower[0]);
        x[1] = problem->lower[1] +
               (j + 0.5) / grid * (problem->upper[1] - problem->lower[1]);
        auto [f, g] = problem->evaluate(x);
        if (violation(g) == 0.0) feasible.push_back(std::move(f));
      }
  } else {
    for (int s = 0; s < samples; ++s) {
      for (int d = 0; d < problem->n_var; ++d) {
        const auto u = static_cast<std::size_t>(d);
        x[u] = rng.uniform(problem->lower[u], problem->upper[u]);
      }
      auto [f, g] = problem->evaluate(x);
      if (violation(g) == 0.0) feasible.push_back(std::move(f));
    }
  }

  Nsga2Config cfg;
  cfg.pop_size = 100;
  cfg.n_offspring = 100;
  Nsga2 alg(cfg);
  const Archive archive = run_baseline(alg, problem, Budget{budget, 0}, seed + 1);
  for (const auto& sol : archive)
    if (violation(sol, false) == 0.0) feasible.push_back(*sol.f);

  std::fprintf(stderr, "%s: %zu feasible points collected\n", name.c_str(),
               feasible.size());
  return nondominated_2d(std::move(feasible));
}

void write_csv(const std::filesystem::path& path, const PointSet& pts) {
  std::ofstream out(path);
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", p[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate the shipped reference-front CSV files"};
  std::string out_dir = "core/data/fronts";
  int samples = 6250000;
  int budget = 100000;
  int points = 1000;
  std::uint64_t seed = 20240101;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--samples", samples, "dense feasible samples per problem");
  app.add_option("--budget", budget, "NSGA-II reference-run evaluations");
  app.add_option("--points", points, "front size to ship");
  app.add_option("--seed", seed, "generator seed");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  for (const std::string name : {"BNH", "SRN", "TNK", "OSY"}) {
    auto front = thin(approximate_front(name, samples, budget, seed),
                      static_cast<std::size_t>(points));
    std::string file = name;
    std::transform(file.begin(), file.end(), file.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    const auto path = std::filesystem::path(out_dir) / (file + ".csv");
    write_csv(path, front);
    std::fprintf(stderr, "%s: wrote %zu points to %s\n", name.c_str(),
                 front.size(), path.string().c_str());
  }
  return 0;
}
