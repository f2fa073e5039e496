#pragma once

#include <cmath>

#include "gpsaf/errors.hpp"

namespace gpsaf {

/// Monotone logarithmic squashing transform for constraint outputs:
/// ln(1 + y) for y >= 0 and -ln(1 - y) for y < 0. Odd and invertible.
inline double plog(double y) {
  if (!std::isfinite(y)) throw NumericError("plog: non-finite input");
  return y >= 0.0 ? std::log1p(y) : -std::log1p(-y);
}

inline double plog_inv(double z) {
  if (!std::isfinite(z)) throw NumericError("plog_inv: non-finite input");
  return z >= 0.0 ? std::expm1(z) : -std::expm1(-z);
}

}  // namespace gpsaf
