#pragma once

#include <optional>
#include <vector>

#include "gpsaf/types.hpp"

namespace test_support {

/// Solution with true values (pass {} for unconstrained).
inline gpsaf::Solution sol(std::vector<double> f, std::vector<double> g = {},
                           std::vector<double> x = {0.0}) {
  gpsaf::Solution s;
  s.x = std::move(x);
  s.f = std::move(f);
  s.g = std::move(g);
  return s;
}

/// Solution carrying predicted values only.
inline gpsaf::Solution predicted(std::vector<double> f_hat,
                                 std::vector<double> g_hat = {},
                                 std::vector<double> x = {0.0}) {
  gpsaf::Solution s;
  s.x = std::move(x);
  s.f_hat = std::move(f_hat);
  s.g_hat = std::move(g_hat);
  return s;
}

}  // namespace test_support
