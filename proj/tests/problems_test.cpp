#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "gpsaf/compare.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/problems.hpp"
#include "gpsaf/rng.hpp"
#include "support/oracles.hpp"

using namespace gpsaf;

namespace {

std::pair<std::vector<double>, std::vector<double>> eval(
    const Problem& p, const std::vector<double>& x) {
  return p.evaluate(x);
}

// Published optimal designs of the inequality-constrained G instances
// (CEC 2006 report values); re-evaluated through our own formulas below.
const std::map<std::string, std::pair<std::vector<double>, double>> kGOptima = {
    {"G1", {{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1}, -15.0}},
    {"G4",
     {{78.0, 33.0, 29.9952560256815985, 45.0, 36.7758129057882073},
      -30665.5386717834}},
    {"G6", {{14.09500000000000064, 0.8429607892154795668}, -6961.81387558015}},
    {"G7",
     {{2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
       0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
       8.2800915887356, 8.3759266477347},
      24.30620906818}},
    {"G8", {{1.22797135260752599, 4.24537336612274885}, -0.0958250414180359}},
    {"G9",
     {{2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
       4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
       1.5942266780671519},
      680.630057374402}},
    {"G24", {{2.32952019747962, 3.17849307411774}, -5.50801327159536}},
};

}  // namespace

TEST_CASE("unknown problems and fixed-dimension overrides are rejected") {
  CHECK_THROWS_AS(make_problem("nosuch"), ConfigError);
  CHECK_THROWS_AS(make_problem("G6", 5), ConfigError);
  CHECK(make_problem("G6", 2).n_var == 2);  // matching override is fine
  for (const auto& name : problem_names()) {
    const Problem p = make_problem(name);
    p.validate();
  }
}

TEST_CASE("single-objective fixtures") {
  const Problem sphere = make_problem("sphere", 3);
  CHECK(eval(sphere, {0, 0, 0}).first[0] == 0.0);
  CHECK(sphere.n_var == 3);

  const Problem rastrigin = make_problem("rastrigin", 4);
  CHECK(eval(rastrigin, {0, 0, 0, 0}).first[0] == doctest::Approx(0.0));
  // any design with a coordinate at 1 scores at least 1
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x = {1.0, rng.uniform(-5.12, 5.12),
                             rng.uniform(-5.12, 5.12), rng.uniform(-5.12, 5.12)};
    CHECK(eval(rastrigin, x).first[0] >= 1.0 - 1e-12);
  }

  const Problem rosenbrock = make_problem("rosenbrock", 5);
  CHECK(eval(rosenbrock, {1, 1, 1, 1, 1}).first[0] == doctest::Approx(0.0));
  const Problem ackley = make_problem("ackley", 6);
  CHECK(eval(ackley, std::vector<double>(6, 0.0)).first[0] ==
        doctest::Approx(0.0).epsilon(1e-9));
  const Problem griewank = make_problem("griewank", 4);
  CHECK(eval(griewank, std::vector<double>(4, 0.0)).first[0] ==
        doctest::Approx(0.0));
}

TEST_CASE("default dimensions follow the experiment setup") {
  CHECK(make_problem("sphere").n_var == 10);
  CHECK(make_problem("ZDT1").n_var == 10);
  CHECK(make_problem("ZDT4").n_var == 5);
  CHECK(make_problem("DTLZ2").n_var == 10);
  CHECK(make_problem("DTLZ2").n_obj == 3);
  CHECK(make_problem("G1").n_var == 13);
  CHECK(make_problem("G9").n_constr == 4);
  CHECK(make_problem("OSY").n_var == 6);
  CHECK(make_problem("C2-DTLZ2").n_constr == 1);
}

TEST_CASE("zdt fixtures") {
  const Problem zdt1 = make_problem("ZDT1", 10);
  const auto [f, g] = eval(zdt1, std::vector<double>(10, 0.0));
  CHECK(f[0] == 0.0);
  CHECK(f[1] == doctest::Approx(1.0));

  // interior point sanity: f2 = g (1 - sqrt(f1/g))
  std::vector<double> x(10, 0.5);
  const auto fx = eval(zdt1, x).first;
  const double gv = 1.0 + 9.0 * 0.5;
  CHECK(fx[1] == doctest::Approx(gv * (1.0 - std::sqrt(0.5 / gv))));

  const Problem zdt4 = make_problem("ZDT4");
  CHECK(zdt4.lower[1] == -5.0);
  CHECK(zdt4.upper[1] == 5.0);
  std::vector<double> opt(5, 0.0);
  const auto f4 = eval(zdt4, opt).first;
  CHECK(f4[1] == doctest::Approx(1.0));
}

TEST_CASE("dtlz fixtures") {
  const Problem dtlz1 = make_problem("DTLZ1", 6);
  std::vector<double> x(6, 0.5);
  const auto f1 = eval(dtlz1, x).first;
  CHECK(f1[0] + f1[1] + f1[2] == doctest::Approx(0.5));

  const Problem dtlz2 = make_problem("DTLZ2", 10);
  std::vector<double> y(10, 0.5);
  const auto f2 = eval(dtlz2, y).first;
  CHECK(f2[0] * f2[0] + f2[1] * f2[1] + f2[2] * f2[2] == doctest::Approx(1.0));
}

TEST_CASE("g-problem optima are feasible and reproduce published values") {
  for (const auto& [name, fixture] : kGOptima) {
    const Problem p = make_problem(name);
    const auto& [x_star, f_star] = fixture;
    REQUIRE(static_cast<int>(x_star.size()) == p.n_var);
    const auto [f, g] = eval(p, x_star);
    for (const double gi : g) CHECK(gi <= 1e-6);
    CHECK(std::abs(f[0] - f_star) <= 1e-4);
    REQUIRE(p.known_optimum.has_value());
    CHECK(std::abs(*p.known_optimum - f_star) <= 1e-4);
  }
}

TEST_CASE("random feasible samples never beat the known optimum") {
  Rng rng(7);
  for (const auto& name :
       {"sphere", "rastrigin", "rosenbrock", "ackley", "griewank", "G1", "G4",
        "G6", "G7", "G8", "G9", "G24"}) {
    const Problem p = make_problem(name);
    REQUIRE(p.known_optimum.has_value());
    const int samples = 1000000 / 12;
    std::vector<double> x(static_cast<std::size_t>(p.n_var));
    for (int s = 0; s < samples; ++s) {
      for (int d = 0; d < p.n_var; ++d) {
        const auto u = static_cast<std::size_t>(d);
        x[u] = rng.uniform(p.lower[u], p.upper[u]);
      }
      const auto [f, g] = eval(p, x);
      if (violation(g) == 0.0) CHECK(f[0] >= *p.known_optimum - 1e-9);
    }
  }
}

TEST_CASE("reference front: zdt1 three-point fixture") {
  const auto front = reference_front("ZDT1", 3);
  REQUIRE(front.size() == 3);
  CHECK(front[0] == std::vector<double>{0.0, 1.0});
  CHECK(front[1][0] == doctest::Approx(0.5));
  CHECK(front[1][1] == doctest::Approx(1.0 - std::sqrt(0.5)));
  CHECK(front[2][0] == doctest::Approx(1.0));
  CHECK(front[2][1] == doctest::Approx(0.0));
}

TEST_CASE("reference front: dtlz2 points lie on the unit sphere") {
  for (const auto& p : reference_front("DTLZ2", 200)) {
    REQUIRE(p.size() == 3);
    CHECK(std::abs(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - 1.0) <= 1e-12);
  }
}

TEST_CASE("reference fronts are mutually non-dominated") {
  for (const auto& name : {"ZDT1", "ZDT2", "ZDT3", "ZDT6", "DTLZ1", "DTLZ2",
                           "DTLZ5", "DTLZ7", "C2-DTLZ2", "BNH", "SRN", "TNK",
                           "OSY"}) {
    const auto front = reference_front(name, 100);
    REQUIRE(static_cast<int>(front.size()) == 100);
    for (const auto& a : front)
      for (const auto& b : front) {
        const bool dom = oracle::dominates(a, b);
        CHECK_FALSE(dom);
      }
  }
}

TEST_CASE("unavailable fronts raise UnsupportedError") {
  CHECK_THROWS_AS(reference_front("sphere", 10), UnsupportedError);
  CHECK_THROWS_AS(reference_front("G6", 10), UnsupportedError);
}

TEST_CASE("c2-dtlz2 constraint matches its front filter") {
  const Problem p = make_problem("C2-DTLZ2", 10);
  // distance variables at 0.5 put F on the sphere; an axis point is feasible
  std::vector<double> x(10, 0.5);
  x[0] = 0.0;
  x[1] = 0.0;  // F = (1, 0, 0)
  const auto [f, g] = eval(p, x);
  CHECK(g[0] <= 0.0);
  CHECK(f[0] == doctest::Approx(1.0));
}
