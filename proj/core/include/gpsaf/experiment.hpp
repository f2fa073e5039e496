#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpsaf/algorithm.hpp"
#include "gpsaf/gpsaf.hpp"
#include "gpsaf/stats.hpp"

namespace gpsaf {

/// One column of the experiment grid: a baseline, optionally wrapped.
struct AlgorithmSpec {
  std::string baseline = "ga";  // ga | de | pso | nsga2
  bool gpsaf = false;
  std::string label;  // defaults to baseline or "gpsaf-<baseline>"
  int pop_size = 20;
  int n_offspring = 10;
  int alpha = 30;
  int beta = 5;
  double gamma = 0.5;
  int doe_size = 20;

  std::string effective_label() const;
};

struct ExperimentConfig {
  std::vector<std::string> problems;
  std::vector<AlgorithmSpec> algorithms;
  int n_runs = 11;
  int se_max = 300;
  std::map<std::string, int> budget_overrides;  // per-problem SE(max)
  std::map<std::string, int> n_var_overrides;   // per-problem dimensions
  std::map<std::string, std::vector<double>> hv_ref_points;  // frontless MOO
  std::uint64_t base_seed = 1;
  int jobs = 1;
  std::string gpsaf_trace_dir;  // per-iteration JSONL traces when non-empty

  /// Fail-fast validation: every name must resolve and every algorithm must
  /// be compatible with its problems' objective counts.
  void validate() const;
};

/// Parses the declarative JSON config document (see README for the schema).
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct RunRecord {
  std::string problem;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string indicator;  // gap | best_f | igd | neg_hv
  double value = 0.0;
  std::vector<double> trace;  // best-so-far indicator per evaluation
  double wall_time_s = 0.0;
  bool failed = false;
  std::string error;
};

/// Instantiates the baseline named in the spec.
std::unique_ptr<BaselineAlgorithm> make_baseline(const AlgorithmSpec& spec);

std::string indicator_name(const Problem& problem);

/// Final scalar indicator (smaller is better): gap to the known optimum (or
/// best feasible objective) for single-objective problems; IGD against the
/// reference front for multi-objective problems, negated hypervolume against
/// hv_ref when no front exists. +inf when no feasible solution was found.
double indicator_value(const Problem& problem, const Archive& archive,
                       const std::optional<std::vector<double>>& hv_ref = {});

/// Best-so-far indicator after each evaluation; monotone non-increasing.
std::vector<double> indicator_trace(
    const Problem& problem, const Archive& archive,
    const std::optional<std::vector<double>>& hv_ref = {});

/// Executes every (algorithm, problem, run) cell with seeds
/// base_seed + run index. Individual failures are recorded, not propagated.
/// Record order is the deterministic grid order regardless of --jobs.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

struct RankTable {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  std::vector<std::vector<double>> ranks;      // [problem][algorithm]
  std::vector<std::vector<int>> dominations;   // [problem][algorithm]
  std::vector<double> mean_ranks;              // [algorithm]
};

/// Builds the per-problem domination ranking and suite means from records
/// (orders follow first appearance in the record list).
RankTable rank_table(std::span<const RunRecord> records, double alpha = 0.05);

std::string to_json_line(const RunRecord& record);
RunRecord parse_run_record(const std::string& line);
void write_run_records(const std::string& path,
                       std::span<const RunRecord> records);
std::vector<RunRecord> read_run_records(const std::string& path);

/// Machine-readable table: one "problem,algorithm,dominations,rank" row per
/// cell plus "(mean)" rows; byte-stable for identical inputs.
std::string rank_table_csv(const RankTable& table);

/// Fixed-width human-readable table; the best rank within each baseline
/// group (an algorithm and its wrapped variant) is marked with '*'.
std::string rank_table_pretty(const RankTable& table);

}  // namespace gpsaf
