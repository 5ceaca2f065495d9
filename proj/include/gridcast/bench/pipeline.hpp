#pragma once

// End-to-end orchestration behind the CLI subcommands.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridcast/bench/config.hpp"
#include "gridcast/eval.hpp"
#include "gridcast/ingest.hpp"

namespace gridcast::bench {

struct Dataset {
  gridstore::Sector sector = gridstore::Sector::Solar;
  gridstore::GridSpec grid;
  gridstore::TimeAxis time;
  std::vector<gridstore::GridStack> weighted;  // w_<var>, daily
  gridstore::Series target;
  std::vector<ingest::FeatureColumn> scalars;   // price (if present) then temporal columns
  ingest::LoadedRegistry registry;
  std::vector<std::string> rejected;
  std::vector<double> capacity_total;
  std::optional<ingest::MiSelection> mi;
};

/// Reads `<data_dir>/{weather/*.gsf, facilities.csv, target.csv[, price.csv]}`,
/// weights the weather by installed capacity and, when enabled, keeps the
/// variables selected by mutual information on the train window.
Dataset load_dataset(const ExperimentConfig& config);
features::DatasetView build_view(const Dataset& data, features::ViewKind kind);

/// out_dir / (run_id or "run-<hash prefix>")
std::filesystem::path run_directory(const ExperimentConfig& config);

struct RunOptions {
  bool verbose = false;
};

struct RunResult {
  std::string tag;
  features::ViewKind view = features::ViewKind::Average;
  models::Family family = models::Family::Linear;
  bool detrend = false;
  bool ok = false;
  std::string error;
  models::Hyperparameters best;
  eval::MetricSet train;
  eval::MetricSet test;
};

struct BenchmarkResult {
  std::filesystem::path run_dir;
  std::vector<RunResult> runs;
  std::size_t failures = 0;
};

/// Tunes every (view, model, detrend) with the configured CV + HPO, refits on
/// train+validation and scores train and test. Writes metrics.csv,
/// predictions/, ledgers/, models/, charts and manifest.json.
BenchmarkResult run_benchmark(const ExperimentConfig& config, const RunOptions& options = {});

void run_ingest(const ExperimentConfig& config, const RunOptions& options = {});
void run_features(const ExperimentConfig& config, const RunOptions& options = {});
/// CV ledgers for every scheme (plus the size sweep) and the report.
BenchmarkResult run_cv_bench(const ExperimentConfig& config, const RunOptions& options = {});
/// Tuning only: ledgers plus hpo/<tag>.json with the selected point.
BenchmarkResult run_hpo(const ExperimentConfig& config, const RunOptions& options = {});
/// Predicts every row of the dataset with a saved model directory.
void run_predict(const ExperimentConfig& config, const std::filesystem::path& model_dir,
                 const RunOptions& options = {});

/// Lists every file under run_dir with the config hash.
void write_manifest(const ExperimentConfig& config, const std::filesystem::path& run_dir, const std::string& command,
                    const std::vector<RunResult>& runs);

}  // namespace gridcast::bench
