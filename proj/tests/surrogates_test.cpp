#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gpsaf/ensemble.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/kriging.hpp"
#include "gpsaf/metrics.hpp"
#include "gpsaf/plog.hpp"
#include "gpsaf/problems.hpp"
#include "gpsaf/rbf.hpp"
#include "gpsaf/rng.hpp"
#include "gpsaf/sampling.hpp"
#include "support/oracles.hpp"

using namespace gpsaf;

namespace {

Eigen::MatrixXd random_designs(int n, int dim, Rng& rng) {
  Eigen::MatrixXd X(n, dim);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < dim; ++d) X(i, d) = rng.uniform();
  return X;
}

double smooth_fn(const Eigen::RowVectorXd& x) {
  double v = 0.0;
  for (int d = 0; d < x.size(); ++d) v += x(d) * x(d) + 0.3 * std::sin(3.0 * x(d));
  return v;
}

/// 5-fold out-of-fold Kendall tau distance of one candidate configuration.
double cv_tau(const CandidateModel& prototype, const Eigen::MatrixXd& X,
              const Eigen::VectorXd& y) {
  const auto n = X.rows();
  Eigen::VectorXd oof(n);
  for (int fold = 0; fold < 5; ++fold) {
    std::vector<int> train, test;
    for (int i = 0; i < n; ++i) (i % 5 == fold ? test : train).push_back(i);
    Eigen::MatrixXd Xt(train.size(), X.cols());
    Eigen::VectorXd yt(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      Xt.row(static_cast<Eigen::Index>(i)) = X.row(train[i]);
      yt(static_cast<Eigen::Index>(i)) = y(train[i]);
    }
    Eigen::MatrixXd Xv(test.size(), X.cols());
    for (std::size_t i = 0; i < test.size(); ++i)
      Xv.row(static_cast<Eigen::Index>(i)) = X.row(test[i]);
    CandidateModel model = prototype.blank_clone();
    model.fit(Xt, yt);
    const Eigen::VectorXd pred = model.predict(Xv);
    for (std::size_t i = 0; i < test.size(); ++i)
      oof(test[i]) = pred(static_cast<Eigen::Index>(i));
  }
  std::vector<double> p(oof.data(), oof.data() + oof.size());
  std::vector<double> t(y.data(), y.data() + y.size());
  return kendall_tau_distance(p, t);
}

}  // namespace

TEST_CASE("plog fixtures and round trip") {
  CHECK(plog(0.0) == 0.0);
  CHECK(plog(std::numbers::e - 1.0) == doctest::Approx(1.0));
  CHECK(plog(-(std::numbers::e - 1.0)) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(plog(std::numeric_limits<double>::infinity()), NumericError);
  CHECK_THROWS_AS(plog(std::nan("")), NumericError);

  Rng rng(1);
  for (int t = 0; t < 5000; ++t) {
    const double y = rng.uniform(-1e6, 1e6);
    CHECK(std::abs(plog_inv(plog(y)) - y) <= 1e-10 * std::max(1.0, std::abs(y)));
    // monotone and odd
    const double y2 = y + rng.uniform(0.0, 10.0) + 1e-9;
    CHECK(plog(y2) > plog(y));
    CHECK(plog(-y) == doctest::Approx(-plog(y)));
  }
}

TEST_CASE("rbf interpolates training data for every kernel and tail") {
  Rng rng(2);
  for (const auto kernel :
       {RbfKernel::kCubic, RbfKernel::kGaussian, RbfKernel::kThinPlate}) {
    for (const int tail : {0, 1}) {
      for (const int dim : {2, 5, 10}) {
        const Eigen::MatrixXd X = random_designs(20, dim, rng);
        Eigen::VectorXd y(20);
        for (int i = 0; i < 20; ++i) y(i) = rng.uniform(-5.0, 5.0);
        RbfConfig cfg;
        cfg.kernel = kernel;
        cfg.tail_degree = tail;
        RbfModel model(cfg);
        model.fit(X, y);
        const Eigen::VectorXd back = model.predict(X);
        for (int i = 0; i < 20; ++i) CHECK(std::abs(back(i) - y(i)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("kriging interpolates training data") {
  Rng rng(3);
  for (const int dim : {2, 5, 10}) {
    const Eigen::MatrixXd X = random_designs(20, dim, rng);
    Eigen::VectorXd y(20);
    for (int i = 0; i < 20; ++i) y(i) = smooth_fn(X.row(i));
    for (const bool standardize : {false, true}) {
      KrigingConfig cfg;
      cfg.standardize_output = standardize;
      KrigingModel model(cfg);
      model.fit(X, y);
      const Eigen::VectorXd back = model.predict(X);
      for (int i = 0; i < 20; ++i) CHECK(std::abs(back(i) - y(i)) <= 1e-5);
    }
  }
}

TEST_CASE("duplicated training designs are survivable") {
  Rng rng(4);
  Eigen::MatrixXd X = random_designs(15, 3, rng);
  X.row(14) = X.row(3);  // exact duplicate
  Eigen::VectorXd y(15);
  for (int i = 0; i < 15; ++i) y(i) = smooth_fn(X.row(i));
  y(14) = y(3);

  RbfModel rbf;
  CHECK_NOTHROW(rbf.fit(X, y));
  KrigingModel kriging;
  CHECK_NOTHROW(kriging.fit(X, y));
}

TEST_CASE("kendall tau distance fixtures") {
  CHECK(kendall_tau_distance(std::vector<double>{1, 2, 3},
                             std::vector<double>{1, 2, 3}) == 0.0);
  CHECK(kendall_tau_distance(std::vector<double>{3, 2, 1},
                             std::vector<double>{1, 2, 3}) == 1.0);
  CHECK(kendall_tau_distance(std::vector<double>{1, 3, 2},
                             std::vector<double>{1, 2, 3}) ==
        doctest::Approx(1.0 / 3.0));
  // a tied pair in either vector counts half
  CHECK(kendall_tau_distance(std::vector<double>{1, 1, 2},
                             std::vector<double>{1, 2, 3}) ==
        doctest::Approx(0.5 / 3.0));
  CHECK_THROWS_AS(kendall_tau_distance(std::vector<double>{1},
                                       std::vector<double>{1}),
                  NumericError);
}

TEST_CASE("error tracker: window semantics") {
  ErrorEstimate e(2);
  CHECK(e.value(0) == 0.0);

  // perfect predictions keep the error at zero
  std::vector<std::vector<double>> truth = {{1.0, 4.0}, {2.0, 5.0}};
  update_error(e, truth, std::vector<std::vector<double>>{{}, {}}, truth,
               std::vector<std::vector<double>>{{}, {}});
  CHECK(e.value(0) == 0.0);
  CHECK(e.value(1) == 0.0);

  // batch max-abs-error: truth (1,2), pred (1.5, 2.1) -> 0.5
  ErrorEstimate single(1);
  update_error(single, std::vector<std::vector<double>>{{1.0}, {2.0}},
               std::vector<std::vector<double>>{{}, {}},
               std::vector<std::vector<double>>{{1.5}, {2.1}},
               std::vector<std::vector<double>>{{}, {}});
  CHECK(single.value(0) == doctest::Approx(0.5));

  // six pushes: the smoothed value is the mean of the last five only
  ErrorEstimate windowed(1);
  std::vector<double> history;
  for (int k = 1; k <= 6; ++k) {
    const double mae = static_cast<double>(k);
    windowed.push_mae(std::vector<double>{mae});
    history.push_back(mae);
    CHECK(windowed.value(0) == doctest::Approx(oracle::window_mean(history)));
  }
  CHECK(windowed.value(0) == doctest::Approx((2 + 3 + 4 + 5 + 6) / 5.0));

  CHECK_THROWS_AS(windowed.push_mae(std::vector<double>{-1.0}), NumericError);
  CHECK_THROWS_AS(
      update_error(windowed, truth, std::vector<std::vector<double>>{{}, {}},
                   std::vector<std::vector<double>>{{1.0, 1.0}},
                   std::vector<std::vector<double>>{{}}),
      ContractError);
}

namespace {

std::shared_ptr<const Problem> unit_problem(int n_var, int n_constr,
                                            decltype(Problem::eval) eval) {
  Problem p;
  p.name = "synthetic";
  p.n_var = n_var;
  p.n_obj = 1;
  p.n_constr = n_constr;
  p.lower.assign(static_cast<std::size_t>(n_var), 0.0);
  p.upper.assign(static_cast<std::size_t>(n_var), 1.0);
  p.eval = std::move(eval);
  return std::make_shared<const Problem>(std::move(p));
}

Archive lhs_archive(const std::shared_ptr<const Problem>& problem, int n,
                    std::uint64_t seed) {
  Rng rng(seed);
  Archive archive;
  for (const auto& x : latin_hypercube(*problem, n, rng)) {
    Solution s;
    s.x = x;
    auto [f, g] = problem->evaluate(x);
    s.f = std::move(f);
    s.g = std::move(g);
    archive.append(std::move(s));
  }
  return archive;
}

}  // namespace

TEST_CASE("ensemble: linear data selects a linear-tail rbf and predicts exactly") {
  auto problem = unit_problem(2, 0, [](std::span<const double> x,
                                       std::span<double> f, std::span<double>) {
    f[0] = 2.0 + 3.0 * x[0] - x[1];
  });
  const Archive archive = lhs_archive(problem, 20, 9);

  SurrogateEnsemble ensemble(problem);
  ensemble.fit(archive);
  const auto ids = ensemble.selected_ids();
  REQUIRE(ids.size() == 1);
  CHECK(ids[0].find("-t1") != std::string::npos);

  const std::vector<std::vector<double>> queries = {{0.1, 0.9}, {0.8, 0.2}};
  const auto pred = ensemble.predict(queries);
  CHECK(pred.f_hat[0][0] == doctest::Approx(2.0 + 0.3 - 0.9).epsilon(1e-6));
  CHECK(pred.f_hat[1][0] == doctest::Approx(2.0 + 2.4 - 0.2).epsilon(1e-6));

  // purity: predicting twice gives identical values
  const auto again = ensemble.predict(queries);
  CHECK(again.f_hat == pred.f_hat);
  // empty input gives empty output
  CHECK(ensemble.predict({}).f_hat.empty());
}

TEST_CASE("ensemble: plog twin wins on an exponential constraint") {
  auto problem = unit_problem(2, 1, [](std::span<const double> x,
                                       std::span<double> f,
                                       std::span<double> g) {
    f[0] = x[0] + x[1];
    g[0] = std::exp(10.0 * x[0]) - 1.0;
  });
  const Archive archive = lhs_archive(problem, 25, 10);

  // direct CV comparison of a plog/plain twin pair
  Eigen::MatrixXd X(25, 2);
  Eigen::VectorXd y(25);
  for (int i = 0; i < 25; ++i) {
    X(i, 0) = archive[static_cast<std::size_t>(i)].x[0];
    X(i, 1) = archive[static_cast<std::size_t>(i)].x[1];
    y(i) = (*archive[static_cast<std::size_t>(i)].g)[0];
  }
  RbfConfig cubic;
  cubic.tail_degree = 1;
  const double plain_tau = cv_tau(CandidateModel("plain", cubic, false), X, y);
  const double plog_tau = cv_tau(CandidateModel("plog", cubic, true), X, y);
  CHECK(plog_tau < plain_tau);

  SurrogateEnsemble ensemble(problem);
  ensemble.fit(archive);
  const auto ids = ensemble.selected_ids();
  REQUIRE(ids.size() == 2);
  CHECK(ids[1].starts_with("plog-"));

  // constraint predictions come back on the original scale
  std::vector<std::vector<double>> training;
  for (const auto& s : archive) training.push_back(s.x);
  const auto pred = ensemble.predict(training);
  for (std::size_t i = 0; i < training.size(); ++i) {
    const double truth = (*archive[i].g)[0];
    CHECK(std::abs(pred.g_hat[i][0] - truth) <=
          1e-4 * std::max(1.0, std::abs(truth)));
  }
}

TEST_CASE("ensemble: positive scaling leaves every candidate's tau unchanged") {
  Rng rng(11);
  const Eigen::MatrixXd X = random_designs(20, 3, rng);
  Eigen::VectorXd y(20);
  for (int i = 0; i < 20; ++i) y(i) = smooth_fn(X.row(i));
  const Eigen::VectorXd scaled = 37.5 * y;

  const auto check_pair = [&](CandidateModel&& proto) {
    const double tau_raw = cv_tau(proto, X, y);
    const double tau_scaled = cv_tau(proto, X, scaled);
    CHECK(tau_raw == doctest::Approx(tau_scaled));
  };
  for (const auto kernel :
       {RbfKernel::kCubic, RbfKernel::kGaussian, RbfKernel::kThinPlate}) {
    RbfConfig cfg;
    cfg.kernel = kernel;
    check_pair(CandidateModel("rbf", cfg, false));
  }
  KrigingConfig raw;
  check_pair(CandidateModel("krig", raw, false));
  KrigingConfig std_out;
  std_out.standardize_output = true;
  check_pair(CandidateModel("krig-std", std_out, false));
}

TEST_CASE("ensemble: observe updates windows and reselects") {
  auto problem = unit_problem(2, 0, [](std::span<const double> x,
                                       std::span<double> f, std::span<double>) {
    f[0] = std::sin(5.0 * x[0]) + x[1] * x[1];
  });
  Archive archive = lhs_archive(problem, 20, 12);
  SurrogateEnsemble ensemble(problem);
  ensemble.fit(archive);
  CHECK(ensemble.error().value(0) >= 0.0);

  // feed a new evaluated batch; error stays non-negative and windows move
  Rng rng(13);
  std::vector<Solution> batch;
  for (const auto& x : latin_hypercube(*problem, 6, rng)) {
    Solution s;
    s.x = x;
    auto [f, g] = problem->evaluate(x);
    s.f = std::move(f);
    s.g = std::move(g);
    batch.push_back(s);
  }
  ensemble.observe(batch);
  CHECK(ensemble.error().value(0) >= 0.0);
  CHECK_NOTHROW(ensemble.selected_ids());

  // the archive precondition is enforced
  SurrogateEnsemble fresh(problem);
  Archive tiny;
  Solution s;
  s.x = {0.5, 0.5};
  s.f = std::vector<double>{0.0};
  s.g = std::vector<double>{};
  tiny.append(s);
  CHECK_THROWS_AS(fresh.fit(tiny), ContractError);
  const std::vector<std::vector<double>> one_query = {{0.5, 0.5}};
  CHECK_THROWS_AS(fresh.predict(one_query), StateError);
}
