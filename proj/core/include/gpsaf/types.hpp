#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpsaf {

/// A boxed black-box problem. Minimization throughout; a constraint value
/// g <= 0 means satisfied. Evaluators must be deterministic.
struct Problem {
  std::string name;
  int n_var = 0;
  int n_obj = 1;
  int n_constr = 0;
  std::vector<double> lower;
  std::vector<double> upper;

  /// Fills f (size n_obj) and g (size n_constr) for a design x (size n_var).
  std::function<void(std::span<const double> x, std::span<double> f,
                     std::span<double> g)>
      eval;

  /// Optimal objective value, when known (single-objective problems).
  std::optional<double> known_optimum;
  /// True when reference_front() can produce the problem's Pareto front.
  bool has_reference_front = false;

  /// Evaluates x, validating its dimension. Returns (F, G).
  std::pair<std::vector<double>, std::vector<double>> evaluate(
      std::span<const double> x) const;

  /// Clamps a design into the box, in place.
  void clamp(std::vector<double>& x) const;

  void validate() const;
};

/// A design vector plus whatever value sets it has acquired so far: true
/// objectives/constraints (f, g) and surrogate predictions (f_hat, g_hat).
struct Solution {
  std::vector<double> x;
  std::optional<std::vector<double>> f;
  std::optional<std::vector<double>> g;
  std::optional<std::vector<double>> f_hat;
  std::optional<std::vector<double>> g_hat;

  bool has_true_values() const { return f.has_value() && g.has_value(); }
  bool has_predictions() const { return f_hat.has_value() && g_hat.has_value(); }

  bool operator==(const Solution&) const = default;
};

/// Ordered record of every solution evaluated on the expensive problem.
/// size() equals the number of expensive evaluations consumed.
class Archive {
 public:
  void append(Solution s);
  std::size_t size() const { return solutions_.size(); }
  bool empty() const { return solutions_.empty(); }
  const Solution& operator[](std::size_t i) const { return solutions_[i]; }
  const std::vector<Solution>& solutions() const { return solutions_; }
  auto begin() const { return solutions_.begin(); }
  auto end() const { return solutions_.end(); }

 private:
  std::vector<Solution> solutions_;
};

/// Expensive-evaluation budget bookkeeping. `used` can never pass the cap.
struct Budget {
  int max_evaluations = 0;
  int used = 0;

  int remaining() const { return max_evaluations - used; }
  void consume(int n);
};

}  // namespace gpsaf
