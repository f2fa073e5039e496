#include "gpsaf/compare.hpp"

#include <algorithm>

#include "gpsaf/errors.hpp"

namespace gpsaf {
namespace {

std::span<const double> objective_values(const Solution& s, bool use_predicted) {
  const auto& v = use_predicted ? s.f_hat : s.f;
  if (!v)
    throw MissingValuesError(use_predicted ? "solution has no predicted objectives"
                                           : "solution has no true objectives");
  return *v;
}

std::span<const double> constraint_values(const Solution& s, bool use_predicted) {
  const auto& v = use_predicted ? s.g_hat : s.g;
  if (!v)
    throw MissingValuesError(use_predicted ? "solution has no predicted constraints"
                                           : "solution has no true constraints");
  return *v;
}

}  // namespace

double violation(std::span<const double> g) {
  double cv = 0.0;
  for (const double gi : g) cv += std::max(0.0, gi);
  return cv;
}

double violation(const Solution& s, bool use_predicted) {
  return violation(constraint_values(s, use_predicted));
}

bool dominates(std::span<const double> a, std::span<const double> b) {
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

Ordering compare(const Solution& a, const Solution& b, bool use_predicted) {
  const auto fa = objective_values(a, use_predicted);
  const auto fb = objective_values(b, use_predicted);
  if (fa.size() != fb.size())
    throw ContractError("compare: objective dimension mismatch");
  const auto ga = constraint_values(a, use_predicted);
  const auto gb = constraint_values(b, use_predicted);
  if (ga.size() != gb.size())
    throw ContractError("compare: constraint dimension mismatch");

  const double cva = violation(ga);
  const double cvb = violation(gb);
  if (cva > 0.0 || cvb > 0.0) {
    if (cva < cvb) return Ordering::A_WINS;
    if (cvb < cva) return Ordering::B_WINS;
    return Ordering::TIE;
  }
  if (dominates(fa, fb)) return Ordering::A_WINS;
  if (dominates(fb, fa)) return Ordering::B_WINS;
  return Ordering::TIE;
}

}  // namespace gpsaf
