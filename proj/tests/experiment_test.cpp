#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "gpsaf/errors.hpp"
#include "gpsaf/experiment.hpp"
#include "gpsaf/problems.hpp"
#include "support/helpers.hpp"

using namespace gpsaf;
using test_support::sol;

TEST_CASE("indicator: single-objective gap and failure sentinel") {
  const Problem sphere = make_problem("sphere", 2);
  Archive archive;
  archive.append(sol({25.0}, {}, {3.0, 4.0}));
  archive.append(sol({0.0}, {}, {0.0, 0.0}));
  CHECK(indicator_name(sphere) == "gap");
  CHECK(indicator_value(sphere, archive) == 0.0);

  const Problem g6 = make_problem("G6");
  Archive infeasible;
  infeasible.append(sol({1.0}, {5.0, 2.0}, {20.0, 20.0}));
  CHECK(std::isinf(indicator_value(g6, infeasible)));

  const auto trace = indicator_trace(sphere, archive);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0] == 25.0);
  CHECK(trace[1] == 0.0);
}

TEST_CASE("indicator: igd of a front-matching archive is zero") {
  const Problem zdt1 = make_problem("ZDT1", 3);
  Archive archive;
  for (const auto& point : reference_front("ZDT1", 500)) {
    Solution s;
    s.x = {point[0], 0.0, 0.0};
    s.f = point;
    s.g = std::vector<double>{};
    archive.append(std::move(s));
  }
  CHECK(indicator_name(zdt1) == "igd");
  CHECK(indicator_value(zdt1, archive) == doctest::Approx(0.0));
}

TEST_CASE("indicator traces are monotone non-increasing") {
  const Problem zdt1 = make_problem("ZDT1", 3);
  Archive archive;
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    std::vector<double> x = {rng.uniform(), rng.uniform(), rng.uniform()};
    Solution s;
    s.x = x;
    auto [f, g] = zdt1.evaluate(x);
    s.f = std::move(f);
    s.g = std::move(g);
    archive.append(std::move(s));
  }
  const auto trace = indicator_trace(zdt1, archive);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
}

TEST_CASE("run_experiment: grid accounting and deterministic rank output") {
  ExperimentConfig cfg;
  cfg.problems = {"sphere"};
  cfg.n_var_overrides["sphere"] = 2;
  AlgorithmSpec ga;
  ga.baseline = "ga";
  AlgorithmSpec de;
  de.baseline = "de";
  cfg.algorithms = {ga, de};
  cfg.n_runs = 11;
  cfg.se_max = 30;
  cfg.base_seed = 77;

  const auto records = run_experiment(cfg);
  REQUIRE(records.size() == 22);
  for (const auto& r : records) {
    CHECK_FALSE(r.failed);
    CHECK(r.trace.size() == 30);
    CHECK(r.indicator == "gap");
  }
  CHECK(records[0].algorithm == "ga");
  CHECK(records[0].seed == 77);
  CHECK(records[1].algorithm == "ga");
  CHECK(records[1].seed == 78);
  CHECK(records[11].algorithm == "de");

  const auto table = rank_table(records);
  REQUIRE(table.problems.size() == 1);
  REQUIRE(table.algorithms.size() == 2);
  CHECK(table.ranks[0][0] + table.ranks[0][1] == doctest::Approx(3.0));

  // reruns are byte-identical at the rank-table level
  const auto again = run_experiment(cfg);
  CHECK(rank_table_csv(rank_table(again)) == rank_table_csv(table));
  // and the parallel path gives the same records in the same order
  ExperimentConfig parallel = cfg;
  parallel.jobs = 4;
  const auto par_records = run_experiment(parallel);
  REQUIRE(par_records.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(par_records[i].value == records[i].value);
    CHECK(par_records[i].algorithm == records[i].algorithm);
  }
}

TEST_CASE("run_experiment: validation fails fast") {
  ExperimentConfig cfg;
  cfg.problems = {"nosuch"};
  AlgorithmSpec ga;
  cfg.algorithms = {ga};
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);

  ExperimentConfig mismatched;
  mismatched.problems = {"ZDT1"};
  mismatched.algorithms = {ga};  // single-objective ga on a bi-objective problem
  CHECK_THROWS_AS(run_experiment(mismatched), ConfigError);

  ExperimentConfig too_few;
  too_few.problems = {"sphere"};
  too_few.algorithms = {ga};
  too_few.n_runs = 1;
  CHECK_THROWS_AS(run_experiment(too_few), ConfigError);
}

TEST_CASE("run records survive a jsonl round trip") {
  RunRecord r;
  r.problem = "sphere";
  r.algorithm = "gpsaf-ga";
  r.seed = 42;
  r.indicator = "gap";
  r.value = 0.125;
  r.trace = {1.0, 0.5, 0.125};
  r.wall_time_s = 0.75;
  RunRecord failed;
  failed.problem = "G6";
  failed.algorithm = "ga";
  failed.seed = 43;
  failed.indicator = "gap";
  failed.value = std::numeric_limits<double>::infinity();
  failed.trace = {std::numeric_limits<double>::infinity()};
  failed.failed = true;
  failed.error = "boom";

  const auto path = std::filesystem::temp_directory_path() / "gpsaf_records.jsonl";
  write_run_records(path.string(), std::vector<RunRecord>{r, failed});
  const auto back = read_run_records(path.string());
  std::filesystem::remove(path);

  REQUIRE(back.size() == 2);
  CHECK(back[0].problem == "sphere");
  CHECK(back[0].value == 0.125);
  CHECK(back[0].trace == r.trace);
  CHECK(back[1].failed);
  CHECK(std::isinf(back[1].value));
  CHECK(std::isinf(back[1].trace[0]));
}

TEST_CASE("experiment config parses from json") {
  const std::string text = R"({
    "problems": ["sphere", "G6"],
    "algorithms": [
      {"baseline": "ga"},
      {"baseline": "ga", "gpsaf": true, "alpha": 10, "beta": 2}
    ],
    "runs": 5,
    "budget": 100,
    "budgets": {"G6": 75},
    "n_var": {"sphere": 4},
    "base_seed": 9
  })";
  const auto cfg = parse_experiment_config(text);
  CHECK(cfg.problems.size() == 2);
  CHECK(cfg.algorithms.size() == 2);
  CHECK(cfg.algorithms[1].gpsaf);
  CHECK(cfg.algorithms[1].alpha == 10);
  CHECK(cfg.algorithms[1].effective_label() == "gpsaf-ga");
  CHECK(cfg.n_runs == 5);
  CHECK(cfg.se_max == 100);
  CHECK(cfg.budget_overrides.at("G6") == 75);
  CHECK(cfg.n_var_overrides.at("sphere") == 4);
  CHECK(cfg.base_seed == 9);
  CHECK_NOTHROW(cfg.validate());

  CHECK_THROWS_AS(parse_experiment_config("not json"), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config("{}"), ConfigError);
}

TEST_CASE("rank table formatting") {
  std::vector<RunRecord> records;
  for (int seed = 0; seed < 5; ++seed) {
    for (const auto& [alg, value] :
         std::vector<std::pair<std::string, double>>{{"ga", 10.0 + seed},
                                                     {"gpsaf-ga", 1.0 + seed}}) {
      RunRecord r;
      r.problem = "sphere";
      r.algorithm = alg;
      r.seed = static_cast<std::uint64_t>(seed);
      r.indicator = "gap";
      r.value = value;
      records.push_back(std::move(r));
    }
  }
  const auto table = rank_table(records);
  const auto csv = rank_table_csv(table);
  CHECK(csv.find("problem,algorithm,dominations,rank") == 0);
  CHECK(csv.find("sphere,ga,1,2") != std::string::npos);
  CHECK(csv.find("sphere,gpsaf-ga,0,1") != std::string::npos);
  const auto pretty = rank_table_pretty(table);
  CHECK(pretty.find("1*") != std::string::npos);  // group best marked
}
