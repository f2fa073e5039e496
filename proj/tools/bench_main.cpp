#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gpsaf/errors.hpp"
#include "gpsaf/experiment.hpp"
#include "gpsaf/problems.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitFailedCells = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gpsaf::ConfigError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            int jobs, std::optional<std::uint64_t> seed_flag,
            const std::string& trace_dir) {
  gpsaf::ExperimentConfig config =
      gpsaf::parse_experiment_config(read_file(config_path));
  config.jobs = jobs;
  config.gpsaf_trace_dir = trace_dir;
  if (seed_flag) config.base_seed = *seed_flag;
  if (const char* env = std::getenv("GPSAF_SEED"))
    config.base_seed = std::stoull(env);
  config.validate();

  std::filesystem::create_directories(out_dir);
  const auto records = gpsaf::run_experiment(config);
  const auto runs_path = (std::filesystem::path(out_dir) / "runs.jsonl").string();
  gpsaf::write_run_records(runs_path, records);

  const auto table = gpsaf::rank_table(records);
  std::ofstream csv(std::filesystem::path(out_dir) / "ranks.csv");
  csv << gpsaf::rank_table_csv(table);
  std::ofstream txt(std::filesystem::path(out_dir) / "ranks.txt");
  const std::string pretty = gpsaf::rank_table_pretty(table);
  txt << pretty;
  std::cout << pretty;

  int failed = 0;
  for (const auto& r : records)
    if (r.failed) {
      ++failed;
      std::cerr << "failed: " << r.problem << " / " << r.algorithm << " / seed "
                << r.seed << ": " << r.error << '\n';
    }
  std::cout << records.size() << " runs written to " << runs_path << '\n';
  return failed == 0 ? 0 : kExitFailedCells;
}

int cmd_rank(const std::string& in_dir, const std::string& out_csv) {
  const auto runs_path = (std::filesystem::path(in_dir) / "runs.jsonl").string();
  const auto records = gpsaf::read_run_records(runs_path);
  if (records.empty()) throw gpsaf::ConfigError("no records in " + runs_path);
  const auto table = gpsaf::rank_table(records);
  std::ofstream out(out_csv);
  if (!out) throw gpsaf::ConfigError("cannot write '" + out_csv + "'");
  out << gpsaf::rank_table_csv(table);
  std::cout << gpsaf::rank_table_pretty(table);
  return 0;
}

int cmd_list_problems() {
  for (const auto& name : gpsaf::problem_names()) {
    const auto p = gpsaf::make_problem(name);
    std::cout << name << "  n_var=" << p.n_var << " n_obj=" << p.n_obj
              << " n_constr=" << p.n_constr
              << (p.known_optimum ? "  f*=" + std::to_string(*p.known_optimum)
                                  : std::string{})
              << (p.has_reference_front ? "  [front]" : "") << '\n';
  }
  return 0;
}

int cmd_trace(const std::string& runs_file) {
  const auto records = gpsaf::read_run_records(runs_file);
  std::cout << "problem,algorithm,seed,evaluation,best\n";
  for (const auto& r : records)
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      std::cout << r.problem << ',' << r.algorithm << ',' << r.seed << ','
                << i + 1 << ',';
      if (std::isfinite(r.trace[i]))
        std::cout << r.trace[i];
      else
        std::cout << "inf";
      std::cout << '\n';
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surrogate-assisted optimization benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute an experiment grid");
  std::string config_path, out_dir = "results", trace_dir;
  int jobs = 1;
  std::optional<std::uint64_t> seed_flag;
  run->add_option("--config", config_path, "experiment config (json)")
      ->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--jobs", jobs, "parallel workers");
  run->add_option("--seed", seed_flag, "override the base seed");
  run->add_option("--gpsaf-trace", trace_dir,
                  "directory for per-iteration wrapper traces (json lines)");

  auto* rank = app.add_subcommand("rank", "recompute rank tables from runs");
  std::string in_dir, out_csv = "ranks.csv";
  rank->add_option("--in", in_dir, "directory containing runs.jsonl")->required();
  rank->add_option("--out", out_csv, "output csv path");

  app.add_subcommand("list-problems", "show the available test problems");

  auto* trace = app.add_subcommand("trace", "emit best-so-far csv for plotting");
  std::string runs_file;
  trace->add_option("--run", runs_file, "runs.jsonl file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(config_path, out_dir, jobs, seed_flag, trace_dir);
    if (rank->parsed()) return cmd_rank(in_dir, out_csv);
    if (trace->parsed()) return cmd_trace(runs_file);
    return cmd_list_problems();
  } catch (const gpsaf::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
