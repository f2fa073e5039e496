#include <benchmark/benchmark.h>

#include "gpsaf/kriging.hpp"
#include "gpsaf/rbf.hpp"
#include "gpsaf/rng.hpp"

namespace {

using gpsaf::Rng;

std::pair<Eigen::MatrixXd, Eigen::VectorXd> training_set(int n, int dim) {
  Rng rng(1);
  Eigen::MatrixXd X(n, dim);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) {
      X(i, d) = rng.uniform();
      s += X(i, d) * X(i, d);
    }
    y(i) = s;
  }
  return {X, y};
}

void BM_RbfFit(benchmark::State& state) {
  const auto [X, y] = training_set(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) {
    gpsaf::RbfModel model;
    model.fit(X, y);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_RbfFit)->Arg(50)->Arg(150)->Arg(300);

void BM_KrigingFit(benchmark::State& state) {
  const auto [X, y] = training_set(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) {
    gpsaf::KrigingModel model;
    model.fit(X, y);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_KrigingFit)->Arg(50)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_KrigingPredict(benchmark::State& state) {
  const auto [X, y] = training_set(300, 10);
  gpsaf::KrigingModel model;
  model.fit(X, y);
  const auto [Q, ignored] = training_set(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(Q));
}
BENCHMARK(BM_KrigingPredict)->Arg(10)->Arg(300);

}  // namespace
