#include <benchmark/benchmark.h>

#include "gpsaf/ga.hpp"
#include "gpsaf/gpsaf.hpp"
#include "gpsaf/metrics.hpp"
#include "gpsaf/pkt.hpp"
#include "gpsaf/problems.hpp"

namespace {

void BM_GpsafIteration(benchmark::State& state) {
  // Full wrapped run divided by its iteration count approximates the
  // per-iteration cost including every surrogate refit.
  const auto problem = std::make_shared<const gpsaf::Problem>(
      gpsaf::make_problem("sphere", 10));
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    gpsaf::GeneticAlgorithm ga;
    gpsaf::GpsafConfig cfg;
    cfg.se_max = budget;
    cfg.seed = 1;
    benchmark::DoNotOptimize(gpsaf::run_gpsaf(ga, problem, cfg));
  }
}
BENCHMARK(BM_GpsafIteration)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Pkt(benchmark::State& state) {
  gpsaf::Rng rng(2);
  std::vector<gpsaf::Solution> pool;
  for (int i = 0; i < state.range(0); ++i) {
    gpsaf::Solution s;
    s.x = {rng.uniform(), rng.uniform()};
    s.f_hat = std::vector<double>{rng.uniform()};
    s.g_hat = std::vector<double>{};
    pool.push_back(std::move(s));
  }
  gpsaf::ErrorEstimate e(1);
  e.push_mae(std::vector<double>{0.1});
  for (auto _ : state)
    benchmark::DoNotOptimize(gpsaf::prob_knockout_tournament(pool, e, 1, rng));
}
BENCHMARK(BM_Pkt)->Arg(8)->Arg(64);

void BM_BaselineRun(benchmark::State& state) {
  const auto problem = std::make_shared<const gpsaf::Problem>(
      gpsaf::make_problem("sphere", 10));
  for (auto _ : state) {
    gpsaf::GeneticAlgorithm ga;
    benchmark::DoNotOptimize(
        gpsaf::run_baseline(ga, problem, gpsaf::Budget{300, 0}, 1));
  }
}
BENCHMARK(BM_BaselineRun);

}  // namespace
