#include "gpsaf/types.hpp"

#include <algorithm>

#include "gpsaf/errors.hpp"

namespace gpsaf {

std::pair<std::vector<double>, std::vector<double>> Problem::evaluate(
    std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_var)
    throw ContractError("evaluate: design has dimension " +
                        std::to_string(x.size()) + ", expected " +
                        std::to_string(n_var));
  std::vector<double> f(static_cast<std::size_t>(n_obj));
  std::vector<double> g(static_cast<std::size_t>(n_constr));
  eval(x, f, g);
  return {std::move(f), std::move(g)};
}

void Problem::clamp(std::vector<double>& x) const {
  for (int i = 0; i < n_var; ++i) {
    const auto u = static_cast<std::size_t>(i);
    x[u] = std::clamp(x[u], lower[u], upper[u]);
  }
}

void Problem::validate() const {
  if (n_var < 1 || n_obj < 1 || n_constr < 0)
    throw ConfigError("problem '" + name + "': invalid dimensions");
  if (static_cast<int>(lower.size()) != n_var ||
      static_cast<int>(upper.size()) != n_var)
    throw ConfigError("problem '" + name + "': bounds size mismatch");
  for (int i = 0; i < n_var; ++i)
    if (!(lower[static_cast<std::size_t>(i)] < upper[static_cast<std::size_t>(i)]))
      throw ConfigError("problem '" + name + "': lower[i] < upper[i] violated");
  if (!eval) throw ConfigError("problem '" + name + "': missing evaluator");
}

void Archive::append(Solution s) {
  if (!s.has_true_values())
    throw ContractError("archive members must carry true objective and constraint values");
  solutions_.push_back(std::move(s));
}

void Budget::consume(int n) {
  if (n < 0 || used + n > max_evaluations)
    throw BudgetError("budget exceeded: " + std::to_string(used) + " + " +
                      std::to_string(n) + " > " +
                      std::to_string(max_evaluations));
  used += n;
}

}  // namespace gpsaf
