#pragma once

#include <string>
#include <vector>

#include "gpsaf/types.hpp"

namespace gpsaf {

/// Builds a named test problem.
///
/// Scalable problems (sphere, rastrigin, rosenbrock, ackley, griewank, the
/// ZDT and DTLZ families, C2-DTLZ2) default to 10 variables (ZDT4: 5) and
/// accept an n_var override. Fixed-dimension problems (G*, BNH, SRN, TNK,
/// OSY) reject overrides. n_var = 0 selects the default.
Problem make_problem(const std::string& name, int n_var = 0);

/// Canonical names accepted by make_problem.
std::vector<std::string> problem_names();

/// n_points mutually non-dominated objective vectors on the true Pareto
/// front. Available for ZDT1-4/6, DTLZ1-7, C2-DTLZ2 (analytic shapes) and
/// BNH/SRN/TNK/OSY (precomputed, shipped with the library). Throws
/// UnsupportedError otherwise.
std::vector<std::vector<double>> reference_front(const std::string& name,
                                                 int n_points);

}  // namespace gpsaf
