#include "gpsaf/gpsaf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gpsaf/errors.hpp"
#include "gpsaf/pkt.hpp"
#include "gpsaf/sampling.hpp"

namespace gpsaf {
namespace {

void attach_predictions(std::vector<Solution>& batch, const Predictions& pred) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    batch[i].f_hat = pred.f_hat[i];
    batch[i].g_hat = pred.g_hat[i];
  }
}

std::vector<std::vector<double>> designs_of(std::span<const Solution> batch) {
  std::vector<std::vector<double>> designs;
  designs.reserve(batch.size());
  for (const auto& s : batch) designs.push_back(s.x);
  return designs;
}

// Evaluates in place so attached predictions survive next to true values.
void evaluate_in_place(const Problem& problem, std::vector<Solution>& batch) {
  for (auto& s : batch) {
    problem.clamp(s.x);
    auto [f, g] = problem.evaluate(s.x);
    s.f = std::move(f);
    s.g = std::move(g);
  }
}

std::vector<double> normalized(const Problem& problem,
                               std::span<const double> x) {
  std::vector<double> out(x.size());
  for (std::size_t d = 0; d < x.size(); ++d)
    out[d] = (x[d] - problem.lower[d]) / (problem.upper[d] - problem.lower[d]);
  return out;
}

}  // namespace

void GpsafConfig::validate() const {
  if (alpha < 1) throw ConfigError("gpsaf: alpha < 1");
  if (beta < 0) throw ConfigError("gpsaf: beta < 0");
  if (!(gamma > 0.0)) throw ConfigError("gpsaf: gamma must be positive");
  if (doe_size < 1) throw ConfigError("gpsaf: doe_size < 1");
  if (se_max < 0) throw ConfigError("gpsaf: se_max < 0");
  if (doe_size > se_max)
    throw BudgetError("gpsaf: doe_size exceeds the evaluation budget");
}

std::vector<Solution> alpha_phase(BaselineAlgorithm& baseline,
                                  const Predictor& predictor, int alpha,
                                  Rng& rng) {
  if (alpha < 1) throw ConfigError("alpha_phase: alpha < 1");
  if (alpha > 1 && !predictor)
    throw StateError("alpha_phase: alpha > 1 requires a predictor");

  auto designs = baseline.infill();
  std::vector<Solution> plan(designs.size());
  for (std::size_t i = 0; i < designs.size(); ++i) plan[i].x = std::move(designs[i]);
  if (predictor) attach_predictions(plan, predictor(designs_of(plan)));

  for (int round = 2; round <= alpha; ++round) {
    auto challengers = baseline.infill();
    if (challengers.size() != plan.size())
      throw ContractError("alpha_phase: infill batch size drifted");
    std::vector<Solution> rivals(challengers.size());
    for (std::size_t i = 0; i < challengers.size(); ++i)
      rivals[i].x = std::move(challengers[i]);
    attach_predictions(rivals, predictor(designs_of(rivals)));
    for (std::size_t j = 0; j < plan.size(); ++j) {
      switch (compare(plan[j], rivals[j], true)) {
        case Ordering::B_WINS:
          plan[j] = std::move(rivals[j]);
          break;
        case Ordering::TIE:
          if (rng.uniform() < 0.5) plan[j] = std::move(rivals[j]);
          break;
        case Ordering::A_WINS:
          break;
      }
    }
  }
  return plan;
}

std::vector<std::vector<Solution>> beta_phase(const BaselineAlgorithm& baseline,
                                              const Predictor& predictor,
                                              std::span<const Solution> plan,
                                              int beta, const Problem& problem,
                                              Rng beta_rng) {
  std::vector<std::vector<Solution>> clusters(plan.size());
  if (beta == 0) return clusters;
  if (!predictor) throw StateError("beta_phase: predictor required");

  std::vector<std::vector<double>> plan_norm;
  plan_norm.reserve(plan.size());
  for (const auto& s : plan) plan_norm.push_back(normalized(problem, s.x));

  auto simulated = baseline.snapshot();
  simulated->reseed(beta_rng);

  for (int step = 0; step < beta; ++step) {
    const auto designs = simulated->infill();
    const Predictions pred = predictor(designs);

    std::vector<Solution> simulated_batch(designs.size());
    for (std::size_t i = 0; i < designs.size(); ++i) {
      // Cluster of the nearest plan slot in normalized design space.
      const auto q = normalized(problem, designs[i]);
      std::size_t nearest = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < plan_norm.size(); ++j) {
        double d = 0.0;
        for (std::size_t k = 0; k < q.size(); ++k) {
          const double diff = q[k] - plan_norm[j][k];
          d += diff * diff;
        }
        if (d < best) {
          best = d;
          nearest = j;
        }
      }
      Solution member;
      member.x = designs[i];
      member.f_hat = pred.f_hat[i];
      member.g_hat = pred.g_hat[i];
      clusters[nearest].push_back(std::move(member));

      // The simulated run treats predictions as evaluations.
      Solution& sim = simulated_batch[i];
      sim.x = designs[i];
      sim.f = pred.f_hat[i];
      sim.g = pred.g_hat[i];
    }
    simulated->advance(simulated_batch);
  }
  return clusters;
}

std::vector<double> replacement_phase(
    std::vector<Solution>& plan, std::span<const std::vector<Solution>> clusters,
    std::span<const std::optional<Solution>> winners, double gamma, Rng& rng) {
  if (clusters.size() != plan.size() || winners.size() != plan.size())
    throw ContractError("replacement_phase: slot count mismatch");
  std::vector<double> rho(plan.size(), 0.0);
  std::size_t densest = 0;
  for (const auto& c : clusters) densest = std::max(densest, c.size());
  if (densest == 0) return rho;

  for (std::size_t j = 0; j < plan.size(); ++j) {
    if (clusters[j].empty()) continue;
    if (!winners[j])
      throw ContractError("replacement_phase: missing winner for non-empty cluster");
    rho[j] = std::pow(static_cast<double>(clusters[j].size()) /
                          static_cast<double>(densest),
                      gamma);
    if (rng.uniform() < rho[j]) plan[j] = *winners[j];
  }
  return rho;
}

Archive run_gpsaf(BaselineAlgorithm& baseline,
                  std::shared_ptr<const Problem> problem,
                  const GpsafConfig& config, const TraceSink& trace) {
  config.validate();
  const bool assisted = config.alpha > 1 || config.beta > 0;
  if (assisted && config.doe_size < problem->n_var + 2)
    throw ConfigError("gpsaf: doe_size must be at least n_var + 2 to fit surrogates");

  const Rng run_rng(config.seed);
  baseline.reset(problem, run_rng.fork("algorithm"));
  Budget budget{config.se_max, 0};
  Archive archive;

  if (budget.remaining() == 0) return archive;

  // DOE: the baseline's own space-filling initialization doubles as the DOE
  // when the sizes agree (the default), which keeps the alpha=1/beta=0
  // fallback exactly equal to the bare baseline run. Otherwise a dedicated
  // sample seeds both the archive and the baseline.
  auto doe_designs = baseline.infill();
  if (static_cast<int>(doe_designs.size()) != config.doe_size) {
    Rng doe_rng = run_rng.fork("doe");
    doe_designs = sample_doe(*problem, config.doe_size, doe_rng);
  }
  std::vector<Solution> doe(doe_designs.size());
  for (std::size_t i = 0; i < doe_designs.size(); ++i)
    doe[i].x = std::move(doe_designs[i]);
  evaluate_in_place(*problem, doe);
  budget.consume(static_cast<int>(doe.size()));
  baseline.advance(doe);
  for (auto& s : doe) archive.append(std::move(s));

  std::optional<SurrogateEnsemble> ensemble;
  if (assisted) ensemble.emplace(problem);

  int iteration = 0;
  while (budget.remaining() > 0) {
    Predictor predictor;
    if (assisted) {
      ensemble->fit(archive);
      predictor = [&](std::span<const std::vector<double>> designs) {
        return ensemble->predict(designs);
      };
    }

    Rng alpha_rng = run_rng.fork("alpha/" + std::to_string(iteration));
    auto plan = alpha_phase(baseline, predictor, config.alpha, alpha_rng);
    if (plan.empty()) throw StateError("gpsaf: baseline produced no infill designs");

    std::vector<std::vector<Solution>> clusters(plan.size());
    std::vector<std::optional<Solution>> winners(plan.size());
    std::vector<double> rho(plan.size(), 0.0);
    if (assisted && config.beta > 0) {
      clusters = beta_phase(baseline, predictor, plan, config.beta, *problem,
                            run_rng.fork("beta/" + std::to_string(iteration)));
      Rng pkt_rng = run_rng.fork("pkt/" + std::to_string(iteration));
      for (std::size_t j = 0; j < clusters.size(); ++j)
        if (!clusters[j].empty())
          winners[j] = prob_knockout_tournament(clusters[j], ensemble->error(),
                                                1, pkt_rng)[0];
      Rng rho_rng = run_rng.fork("rho/" + std::to_string(iteration));
      rho = replacement_phase(plan, clusters, winners, config.gamma, rho_rng);
    }

    if (static_cast<int>(plan.size()) > budget.remaining())
      plan.resize(static_cast<std::size_t>(budget.remaining()));

    evaluate_in_place(*problem, plan);
    budget.consume(static_cast<int>(plan.size()));
    baseline.advance(plan);

    if (assisted) {
      std::vector<std::vector<double>> tf, tg, pf, pg;
      for (const auto& s : plan) {
        tf.push_back(*s.f);
        tg.push_back(*s.g);
        pf.push_back(*s.f_hat);
        pg.push_back(*s.g_hat);
      }
      update_error(ensemble->error(), tf, tg, pf, pg);
      ensemble->observe(plan);
    }
    for (auto& s : plan) archive.append(s);

    if (trace) {
      IterationTrace record;
      record.iteration = iteration;
      record.batch_size = static_cast<int>(plan.size());
      for (const auto& c : clusters)
        record.cluster_sizes.push_back(static_cast<int>(c.size()));
      record.rho = rho;
      if (assisted) {
        record.selected_models = ensemble->selected_ids();
        record.error = ensemble->error().values();
      }
      trace(record, archive);
    }
    ++iteration;
  }
  return archive;
}

}  // namespace gpsaf
