#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "gpsaf/algorithm.hpp"
#include "gpsaf/compare.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/ga.hpp"
#include "gpsaf/problems.hpp"
#include "gpsaf/rng.hpp"
#include "gpsaf/sampling.hpp"
#include "support/helpers.hpp"

using namespace gpsaf;
using test_support::sol;

TEST_CASE("violation sums positive constraint values") {
  CHECK(violation(sol({0.0}, {-1.0, -2.0}), false) == 0.0);
  CHECK(violation(sol({0.0}, {0.5, -1.0}), false) == 0.5);
  CHECK(violation(sol({0.0}, {0.5, 0.25}), false) == 0.75);
  CHECK_THROWS_AS(violation(test_support::predicted({1.0}), false),
                  MissingValuesError);
}

TEST_CASE("compare: feasibility first, then dominance") {
  CHECK(compare(sol({1.0}), sol({2.0}), false) == Ordering::A_WINS);
  CHECK(compare(sol({5.0}, {0.5}), sol({0.0}, {0.2}), false) == Ordering::B_WINS);
  CHECK(compare(sol({1.0, 2.0}), sol({2.0, 1.0}), false) == Ordering::TIE);
  // exactly one feasible
  CHECK(compare(sol({9.0}, {-1.0}), sol({0.0}, {3.0}), false) == Ordering::A_WINS);
  // equal violation is a tie regardless of objectives
  CHECK(compare(sol({1.0}, {2.0}), sol({9.0}, {2.0}), false) == Ordering::TIE);
}

TEST_CASE("compare: contract errors") {
  CHECK_THROWS_AS(compare(sol({1.0}), sol({1.0, 2.0}), false), ContractError);
  CHECK_THROWS_AS(compare(sol({1.0}), test_support::predicted({1.0}), false),
                  MissingValuesError);
  // predicted comparison uses the predicted set
  CHECK(compare(test_support::predicted({1.0}, {}),
                test_support::predicted({2.0}, {}), true) == Ordering::A_WINS);
}

TEST_CASE("compare properties on random solutions") {
  Rng rng(7);
  int feasible_checks = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto draw = [&] {
      return sol({rng.uniform(-5, 5), rng.uniform(-5, 5)},
                 {rng.uniform(-1, 1)});
    };
    const auto a = draw();
    const auto b = draw();
    const auto ab = compare(a, b, false);
    const auto ba = compare(b, a, false);
    // antisymmetry
    if (ab == Ordering::A_WINS) CHECK(ba == Ordering::B_WINS);
    if (ab == Ordering::TIE) CHECK(ba == Ordering::TIE);
    CHECK(compare(a, a, false) == Ordering::TIE);
    // feasibility dominance
    if (violation(a, false) == 0.0 && violation(b, false) > 0.0) {
      CHECK(ab == Ordering::A_WINS);
      ++feasible_checks;
    }
  }
  CHECK(feasible_checks > 100);
}

TEST_CASE("compare is transitive for single-objective feasible solutions") {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = sol({rng.uniform()});
    const auto b = sol({rng.uniform()});
    const auto c = sol({rng.uniform()});
    if (compare(a, b, false) == Ordering::A_WINS &&
        compare(b, c, false) == Ordering::A_WINS)
      CHECK(compare(a, c, false) == Ordering::A_WINS);
  }
}

TEST_CASE("rng: forks are independent of parent consumption") {
  Rng a(42);
  Rng b(42);
  (void)a.uniform();
  (void)a.uniform();
  Rng child_a = a.fork("x");
  Rng child_b = b.fork("x");
  for (int i = 0; i < 10; ++i) CHECK(child_a.next_u64() == child_b.next_u64());
  // distinct labels give distinct streams
  Rng other = b.fork("y");
  CHECK(other.next_u64() != b.fork("x").next_u64());
}

TEST_CASE("rng: uniform_int covers the range") {
  Rng rng(3);
  std::set<int> seen;
  for (int i = 0; i < 1000; ++i) {
    const int v = rng.uniform_int(2, 5);
    CHECK(v >= 2);
    CHECK(v <= 5);
    seen.insert(v);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("latin hypercube: strata occupancy and determinism") {
  const auto problem =
      std::make_shared<const Problem>(make_problem("sphere", 10));
  Rng rng(11);
  const auto pts = sample_doe(*problem, 20, rng);
  REQUIRE(pts.size() == 20);
  for (int d = 0; d < 10; ++d) {
    std::set<int> strata;
    for (const auto& p : pts) {
      const auto u = static_cast<std::size_t>(d);
      CHECK(p[u] >= problem->lower[u]);
      CHECK(p[u] <= problem->upper[u]);
      const double unit =
          (p[u] - problem->lower[u]) / (problem->upper[u] - problem->lower[u]);
      strata.insert(static_cast<int>(unit * 20.0));
    }
    CHECK(strata.size() == 20);
  }
  Rng rng2(11);
  CHECK(sample_doe(*problem, 20, rng2) == pts);
}

TEST_CASE("maximin doe never loses to plain lhs from the same stream") {
  const auto problem = std::make_shared<const Problem>(make_problem("sphere", 5));
  const auto min_dist = [](const std::vector<std::vector<double>>& pts) {
    double best = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        double d = 0;
        for (std::size_t k = 0; k < pts[i].size(); ++k)
          d += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
        best = std::min(best, d);
      }
    return best;
  };
  int wins = 0;
  for (int s = 0; s < 100; ++s) {
    Rng a(static_cast<std::uint64_t>(s));
    Rng b(static_cast<std::uint64_t>(s));
    if (min_dist(sample_doe(*problem, 15, a)) >=
        min_dist(latin_hypercube(*problem, 15, b)))
      ++wins;
  }
  CHECK(wins >= 95);
}

TEST_CASE("run_baseline: budget accounting") {
  const auto problem = std::make_shared<const Problem>(make_problem("sphere", 2));
  GeneticAlgorithm ga;
  const Archive archive = run_baseline(ga, problem, Budget{30, 0}, 5);
  CHECK(archive.size() == 30);
  for (const auto& s : archive) {
    CHECK(s.has_true_values());
    for (int d = 0; d < 2; ++d) {
      CHECK(s.x[static_cast<std::size_t>(d)] >= problem->lower[static_cast<std::size_t>(d)]);
      CHECK(s.x[static_cast<std::size_t>(d)] <= problem->upper[static_cast<std::size_t>(d)]);
    }
  }

  GeneticAlgorithm fresh;
  CHECK(run_baseline(fresh, problem, Budget{0, 0}, 5).size() == 0);
}

TEST_CASE("run_baseline: same seed gives bit-identical archives") {
  const auto problem = std::make_shared<const Problem>(make_problem("rastrigin", 3));
  GeneticAlgorithm a, b;
  const Archive first = run_baseline(a, problem, Budget{60, 0}, 99);
  const Archive second = run_baseline(b, problem, Budget{60, 0}, 99);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].x == second[i].x);
    CHECK(*first[i].f == *second[i].f);
  }
}

TEST_CASE("run_baseline: truncation keeps the budget exact") {
  const auto problem = std::make_shared<const Problem>(make_problem("sphere", 2));
  GeneticAlgorithm ga;
  // 20 init + 10 + 10 + truncated 5
  const Archive archive = run_baseline(ga, problem, Budget{45, 0}, 1);
  CHECK(archive.size() == 45);
}

TEST_CASE("budget consume guards the cap") {
  Budget b{10, 0};
  b.consume(10);
  CHECK(b.remaining() == 0);
  CHECK_THROWS_AS(b.consume(1), BudgetError);
}

TEST_CASE("snapshot: advancing a copy leaves the original untouched") {
  const auto problem = std::make_shared<const Problem>(make_problem("sphere", 4));
  GeneticAlgorithm original;
  GeneticAlgorithm control;
  const Rng run_rng(21);
  original.reset(problem, run_rng.fork("algorithm"));
  control.reset(problem, run_rng.fork("algorithm"));

  // Bring both to an identical evaluated state.
  const auto init = original.infill();
  (void)control.infill();
  const auto evaluated = evaluate_designs(*problem, init);
  original.advance(evaluated);
  control.advance(evaluated);

  auto copy = original.snapshot();
  const auto extra = evaluate_designs(*problem, copy->infill());
  copy->advance(extra);

  CHECK(original.infill() == control.infill());
}
