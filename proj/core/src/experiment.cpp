#include "gpsaf/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gpsaf/de.hpp"
#include "gpsaf/errors.hpp"
#include "gpsaf/ga.hpp"
#include "gpsaf/indicators.hpp"
#include "gpsaf/nsga2.hpp"
#include "gpsaf/operators.hpp"
#include "gpsaf/problems.hpp"
#include "gpsaf/pso.hpp"

namespace gpsaf {
namespace {

constexpr int kIgdReferencePoints = 500;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_g(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

bool multi_objective(const std::string& baseline) { return baseline == "nsga2"; }

/// Incrementally maintained feasible non-dominated objective set.
class NondominatedSet {
 public:
  /// Returns true when the set changed.
  bool insert(const std::vector<double>& f) {
    for (const auto& p : points_)
      if (p == f || dominates(p, f)) return false;
    std::erase_if(points_, [&](const std::vector<double>& p) {
      return dominates(f, p);
    });
    points_.push_back(f);
    return true;
  }
  const std::vector<std::vector<double>>& points() const { return points_; }

 private:
  std::vector<std::vector<double>> points_;
};

}  // namespace

std::string AlgorithmSpec::effective_label() const {
  if (!label.empty()) return label;
  return gpsaf ? "gpsaf-" + baseline : baseline;
}

std::unique_ptr<BaselineAlgorithm> make_baseline(const AlgorithmSpec& spec) {
  if (spec.baseline == "ga") {
    GaConfig cfg;
    cfg.pop_size = spec.pop_size;
    cfg.n_offspring = spec.n_offspring;
    return std::make_unique<GeneticAlgorithm>(cfg);
  }
  if (spec.baseline == "de") {
    DeConfig cfg;
    cfg.pop_size = spec.pop_size;
    cfg.n_offspring = spec.n_offspring;
    return std::make_unique<DifferentialEvolution>(cfg);
  }
  if (spec.baseline == "pso") {
    PsoConfig cfg;
    cfg.swarm_size = spec.pop_size;
    return std::make_unique<ParticleSwarm>(cfg);
  }
  if (spec.baseline == "nsga2") {
    Nsga2Config cfg;
    cfg.pop_size = spec.pop_size;
    cfg.n_offspring = spec.n_offspring;
    return std::make_unique<Nsga2>(cfg);
  }
  throw ConfigError("unknown baseline algorithm '" + spec.baseline + "'");
}

std::string indicator_name(const Problem& problem) {
  if (problem.n_obj == 1)
    return problem.known_optimum ? "gap" : "best_f";
  return problem.has_reference_front ? "igd" : "neg_hv";
}

namespace {

double single_objective_indicator(const Problem& problem, const Solution& s) {
  const double f = (*s.f)[0];
  return problem.known_optimum ? f - *problem.known_optimum : f;
}

double multi_objective_indicator(
    const Problem& problem, const std::vector<std::vector<double>>& nd_points,
    const std::vector<std::vector<double>>& front,
    const std::optional<std::vector<double>>& hv_ref) {
  if (nd_points.empty()) return kInf;
  if (!front.empty()) return igd(nd_points, front);
  if (!hv_ref)
    throw UnsupportedError("problem '" + problem.name +
                           "' has no reference front; configure an hv_ref point");
  return -hypervolume(nd_points, *hv_ref);
}

std::vector<std::vector<double>> front_or_empty(const Problem& problem) {
  if (problem.n_obj > 1 && problem.has_reference_front)
    return reference_front(problem.name, kIgdReferencePoints);
  return {};
}

}  // namespace

double indicator_value(const Problem& problem, const Archive& archive,
                       const std::optional<std::vector<double>>& hv_ref) {
  if (archive.empty()) return kInf;
  if (problem.n_obj == 1) {
    double best = kInf;
    for (const auto& s : archive)
      if (violation(s, false) == 0.0)
        best = std::min(best, single_objective_indicator(problem, s));
    return best;
  }
  NondominatedSet nd;
  for (const auto& s : archive)
    if (violation(s, false) == 0.0) nd.insert(*s.f);
  return multi_objective_indicator(problem, nd.points(), front_or_empty(problem),
                                   hv_ref);
}

std::vector<double> indicator_trace(
    const Problem& problem, const Archive& archive,
    const std::optional<std::vector<double>>& hv_ref) {
  std::vector<double> trace;
  trace.reserve(archive.size());
  if (problem.n_obj == 1) {
    double best = kInf;
    for (const auto& s : archive) {
      if (violation(s, false) == 0.0)
        best = std::min(best, single_objective_indicator(problem, s));
      trace.push_back(best);
    }
    return trace;
  }
  const auto front = front_or_empty(problem);
  NondominatedSet nd;
  double current = kInf;
  for (const auto& s : archive) {
    if (violation(s, false) == 0.0 && nd.insert(*s.f))
      current = multi_objective_indicator(problem, nd.points(), front, hv_ref);
    trace.push_back(current);
  }
  return trace;
}

void ExperimentConfig::validate() const {
  if (problems.empty()) throw ConfigError("config: no problems listed");
  if (algorithms.empty()) throw ConfigError("config: no algorithms listed");
  if (n_runs < 2) throw ConfigError("config: n_runs must be at least 2");
  if (se_max < 1) throw ConfigError("config: budget must be positive");
  if (jobs < 1) throw ConfigError("config: jobs must be positive");
  for (const auto& [name, value] : budget_overrides)
    if (value < 1) throw ConfigError("config: bad budget for '" + name + "'");

  for (const auto& spec : algorithms) {
    make_baseline(spec);  // validates the name and base parameters
    for (const auto& name : problems) {
      int n_var = 0;
      if (const auto it = n_var_overrides.find(name); it != n_var_overrides.end())
        n_var = it->second;
      const Problem p = make_problem(name, n_var);  // throws on unknown name
      const bool wants_multi = multi_objective(spec.baseline);
      if (wants_multi && p.n_obj < 2)
        throw ConfigError("config: '" + spec.baseline + "' needs a multi-objective problem, got '" + name + "'");
      if (!wants_multi && p.n_obj != 1)
        throw ConfigError("config: '" + spec.baseline + "' is single-objective, got '" + name + "'");
    }
  }
}

namespace {

RunRecord execute_cell(const ExperimentConfig& config, const AlgorithmSpec& spec,
                       const std::string& problem_name, int run_index) {
  RunRecord record;
  record.problem = problem_name;
  record.algorithm = spec.effective_label();
  record.seed = config.base_seed + static_cast<std::uint64_t>(run_index);

  const auto started = std::chrono::steady_clock::now();
  try {
    int n_var = 0;
    if (const auto it = config.n_var_overrides.find(problem_name);
        it != config.n_var_overrides.end())
      n_var = it->second;
    auto problem = std::make_shared<const Problem>(make_problem(problem_name, n_var));
    problem->validate();

    int budget = config.se_max;
    if (const auto it = config.budget_overrides.find(problem_name);
        it != config.budget_overrides.end())
      budget = it->second;

    std::optional<std::vector<double>> hv_ref;
    if (const auto it = config.hv_ref_points.find(problem_name);
        it != config.hv_ref_points.end())
      hv_ref = it->second;

    auto algorithm = make_baseline(spec);
    Archive archive;
    if (spec.gpsaf) {
      GpsafConfig gp;
      gp.alpha = spec.alpha;
      gp.beta = spec.beta;
      gp.gamma = spec.gamma;
      gp.doe_size = spec.doe_size;
      gp.se_max = budget;
      gp.seed = record.seed;

      TraceSink sink;
      std::ofstream trace_file;
      if (!config.gpsaf_trace_dir.empty()) {
        std::filesystem::create_directories(config.gpsaf_trace_dir);
        const auto path = std::filesystem::path(config.gpsaf_trace_dir) /
                          (problem_name + "-" + record.algorithm + "-" +
                           std::to_string(record.seed) + ".jsonl");
        trace_file.open(path);
        sink = [&](const IterationTrace& t, const Archive& a) {
          nlohmann::json line;
          line["iteration"] = t.iteration;
          line["batch"] = t.batch_size;
          line["clusters"] = t.cluster_sizes;
          line["rho"] = t.rho;
          line["models"] = t.selected_models;
          line["e"] = t.error;
          const double best = indicator_value(*problem, a, hv_ref);
          line["best"] = std::isfinite(best) ? nlohmann::json(best)
                                             : nlohmann::json("inf");
          trace_file << line.dump() << '\n';
        };
      }
      archive = run_gpsaf(*algorithm, problem, gp, sink);
    } else {
      archive = run_baseline(*algorithm, problem, Budget{budget, 0}, record.seed);
    }

    record.indicator = indicator_name(*problem);
    record.value = indicator_value(*problem, archive, hv_ref);
    record.trace = indicator_trace(*problem, archive, hv_ref);
  } catch (const std::exception& e) {
    record.failed = true;
    record.error = e.what();
    record.value = kInf;
  }
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return record;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();

  struct Cell {
    const AlgorithmSpec* spec;
    const std::string* problem;
    int run;
  };
  std::vector<Cell> cells;
  for (const auto& problem : config.problems)
    for (const auto& spec : config.algorithms)
      for (int run = 0; run < config.n_runs; ++run)
        cells.push_back({&spec, &problem, run});

  std::vector<RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(config.jobs, static_cast<int>(cells.size())));
  const auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      records[i] = execute_cell(config, *cells[i].spec, *cells[i].problem,
                                cells[i].run);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

RankTable rank_table(std::span<const RunRecord> records, double alpha) {
  RankTable table;
  for (const auto& r : records) {
    if (std::find(table.problems.begin(), table.problems.end(), r.problem) ==
        table.problems.end())
      table.problems.push_back(r.problem);
    if (std::find(table.algorithms.begin(), table.algorithms.end(),
                  r.algorithm) == table.algorithms.end())
      table.algorithms.push_back(r.algorithm);
  }

  table.mean_ranks.assign(table.algorithms.size(), 0.0);
  for (const auto& problem : table.problems) {
    std::vector<std::vector<double>> samples(table.algorithms.size());
    for (const auto& r : records) {
      if (r.problem != problem) continue;
      const auto a = static_cast<std::size_t>(
          std::find(table.algorithms.begin(), table.algorithms.end(),
                    r.algorithm) -
          table.algorithms.begin());
      samples[a].push_back(r.value);
    }
    const auto row = domination_ranks(samples, alpha);
    table.ranks.push_back(row.ranks);
    table.dominations.push_back(row.dominated_by);
    for (std::size_t a = 0; a < table.algorithms.size(); ++a)
      table.mean_ranks[a] += row.ranks[a];
  }
  for (auto& v : table.mean_ranks) v /= static_cast<double>(table.problems.size());
  return table;
}

std::string to_json_line(const RunRecord& record) {
  nlohmann::json j;
  j["problem"] = record.problem;
  j["algorithm"] = record.algorithm;
  j["seed"] = record.seed;
  j["indicator"] = record.indicator;
  j["value"] = std::isfinite(record.value) ? nlohmann::json(record.value)
                                           : nlohmann::json("inf");
  nlohmann::json trace = nlohmann::json::array();
  for (const double v : record.trace)
    trace.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json("inf"));
  j["trace"] = std::move(trace);
  j["wall_time_s"] = record.wall_time_s;
  j["failed"] = record.failed;
  j["error"] = record.error;
  return j.dump();
}

namespace {

double json_value_or_inf(const nlohmann::json& v) {
  return v.is_string() ? kInf : v.get<double>();
}

}  // namespace

RunRecord parse_run_record(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  RunRecord r;
  r.problem = j.at("problem").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.indicator = j.at("indicator").get<std::string>();
  r.value = json_value_or_inf(j.at("value"));
  for (const auto& v : j.at("trace")) r.trace.push_back(json_value_or_inf(v));
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.failed = j.at("failed").get<bool>();
  r.error = j.at("error").get<std::string>();
  return r;
}

void write_run_records(const std::string& path,
                       std::span<const RunRecord> records) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<RunRecord> read_run_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::vector<RunRecord> records;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) records.push_back(parse_run_record(line));
  return records;
}

std::string rank_table_csv(const RankTable& table) {
  std::ostringstream os;
  os << "problem,algorithm,dominations,rank\n";
  for (std::size_t p = 0; p < table.problems.size(); ++p)
    for (std::size_t a = 0; a < table.algorithms.size(); ++a)
      os << table.problems[p] << ',' << table.algorithms[a] << ','
         << table.dominations[p][a] << ',' << format_g(table.ranks[p][a]) << '\n';
  for (std::size_t a = 0; a < table.algorithms.size(); ++a)
    os << "(mean)," << table.algorithms[a] << ",," << format_g(table.mean_ranks[a])
       << '\n';
  return os.str();
}

namespace {

// Group key: an algorithm and its wrapped variant share a column group.
std::string group_of(const std::string& label) {
  constexpr std::string_view prefix = "gpsaf-";
  if (label.starts_with(prefix)) return label.substr(prefix.size());
  return label;
}

}  // namespace

std::string rank_table_pretty(const RankTable& table) {
  const std::size_t m = table.algorithms.size();
  std::size_t name_width = 8;
  for (const auto& p : table.problems) name_width = std::max(name_width, p.size());
  std::vector<std::size_t> col(m);
  for (std::size_t a = 0; a < m; ++a)
    col[a] = std::max<std::size_t>(table.algorithms[a].size() + 1, 8);

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_width) + 2) << "problem";
  for (std::size_t a = 0; a < m; ++a)
    os << std::right << std::setw(static_cast<int>(col[a])) << table.algorithms[a];
  os << '\n';

  const auto emit_row = [&](const std::string& name,
                            const std::vector<double>& ranks) {
    os << std::left << std::setw(static_cast<int>(name_width) + 2) << name;
    for (std::size_t a = 0; a < m; ++a) {
      double group_best = ranks[a];
      for (std::size_t b = 0; b < m; ++b)
        if (group_of(table.algorithms[b]) == group_of(table.algorithms[a]))
          group_best = std::min(group_best, ranks[b]);
      std::ostringstream cell;
      cell << std::setprecision(4) << ranks[a];
      if (ranks[a] == group_best) cell << '*';
      os << std::right << std::setw(static_cast<int>(col[a])) << cell.str();
    }
    os << '\n';
  };
  for (std::size_t p = 0; p < table.problems.size(); ++p)
    emit_row(table.problems[p], table.ranks[p]);
  emit_row("(mean)", table.mean_ranks);
  return os.str();
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.problems = j.at("problems").get<std::vector<std::string>>();
    for (const auto& a : j.at("algorithms")) {
      AlgorithmSpec spec;
      spec.baseline = a.at("baseline").get<std::string>();
      spec.gpsaf = a.value("gpsaf", false);
      spec.label = a.value("label", std::string{});
      spec.pop_size = a.value("pop_size", spec.pop_size);
      spec.n_offspring = a.value("n_offspring", spec.n_offspring);
      spec.alpha = a.value("alpha", spec.alpha);
      spec.beta = a.value("beta", spec.beta);
      spec.gamma = a.value("gamma", spec.gamma);
      spec.doe_size = a.value("doe_size", spec.doe_size);
      cfg.algorithms.push_back(std::move(spec));
    }
    cfg.n_runs = j.value("runs", cfg.n_runs);
    cfg.se_max = j.value("budget", cfg.se_max);
    cfg.base_seed = j.value("base_seed", cfg.base_seed);
    if (j.contains("budgets"))
      cfg.budget_overrides = j.at("budgets").get<std::map<std::string, int>>();
    if (j.contains("n_var")) {
      if (j.at("n_var").is_object())
        cfg.n_var_overrides = j.at("n_var").get<std::map<std::string, int>>();
      else
        for (const auto& p : cfg.problems)
          cfg.n_var_overrides[p] = j.at("n_var").get<int>();
    }
    if (j.contains("hv_ref"))
      cfg.hv_ref_points =
          j.at("hv_ref").get<std::map<std::string, std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace gpsaf
