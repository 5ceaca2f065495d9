#pragma once

// Cross-validation schemes, generalization-error estimates and the
// estimated-vs-realized error experiment.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gridcast/features.hpp"
#include "gridcast/hpo.hpp"
#include "gridcast/models/model.hpp"

namespace gridcast::crossval {

enum class Scheme { Holdout, KFold, Expanding, Sliding, Blocking };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view text);

struct SchemeParams {
  Scheme scheme = Scheme::KFold;
  bool shuffle = false;     // holdout and kfold only
  int k = 10;
  int block_len = 7;
  /// Holdout test length in rows; falls back to test_fraction when it would
  /// leave less than half the rows for training.
  std::size_t holdout_rows = 365;
  double test_fraction = 0.1;  // blocking, and the holdout fallback
  std::uint64_t rng_seed = 0;

  void validate() const;
  /// "kfold", "kfold_shuffled", ...
  std::string label() const;
};

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

struct SplitPlan {
  std::vector<Split> iterations;
};

/// Indices are positions in [0, n); train and test lists come back sorted.
SplitPlan make_splits(std::size_t n, const SchemeParams& params);

struct CvEstimate {
  double eps_hat = 0.0;                  // mean of per-iteration RMSE
  std::vector<double> iteration_rmse;
  std::size_t fits = 0;
};

/// `window` maps plan positions to view rows.
CvEstimate estimate_generalization_error(const models::ModelSpec& spec, const features::DatasetView& view,
                                         std::span<const std::size_t> window, const SplitPlan& plan);

double rmse(std::span<const double> y, std::span<const double> yhat);

struct LedgerRow {
  std::size_t trial_id = 0;
  models::Hyperparameters hyperparameters;
  double eps_hat = 0.0;
  double eps = 0.0;
  double delta = 0.0;  // eps - eps_hat
  double seconds = 0.0;
};

struct LedgerSummary {
  double mean_delta = 0.0;
  double std_delta = 0.0;  // sample standard deviation
  double delta_min = 0.0;  // delta of the trial with the smallest eps_hat
  double mean_seconds = 0.0;
  std::size_t trials = 0;
};

struct TrialLedger {
  std::string scheme;
  std::string hpo;
  std::string model;
  std::vector<LedgerRow> rows;
  std::size_t failed = 0;

  LedgerSummary summary() const;
};

struct ExperimentOptions {
  models::Family family = models::Family::Forest;
  hpo::HPSpace space;
  models::Hyperparameters fixed;  // merged under every proposed point
  std::uint64_t model_seed = 0;
  hpo::SearchOptions search;
};

/// Tunes on CV inside `train_rows` (eps_hat) and scores each trial's refit on
/// `validation_rows` (eps). Validation rows must follow the train rows.
TrialLedger run_delta_eps_experiment(const features::DatasetView& view, std::span<const std::size_t> train_rows,
                                     std::span<const std::size_t> validation_rows, const SchemeParams& scheme,
                                     const ExperimentOptions& options);

struct SizePoint {
  std::size_t size = 0;
  double mean_abs_delta = 0.0;
  double std_abs_delta = 0.0;
  LedgerSummary summary;
};

/// Each size uses the most recent `size` rows of `train_rows`.
std::vector<SizePoint> dataset_size_sweep(const features::DatasetView& view, std::span<const std::size_t> train_rows,
                                          std::span<const std::size_t> validation_rows,
                                          std::span<const std::size_t> sizes, const SchemeParams& scheme,
                                          const ExperimentOptions& options);

void write_ledger_csv(const TrialLedger& ledger, const std::filesystem::path& path, bool append = false);

}  // namespace gridcast::crossval
