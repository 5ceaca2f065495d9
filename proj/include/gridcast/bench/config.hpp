#pragma once

// Experiment and synthetic-data configuration (JSON, unknown keys rejected).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gridcast/crossval.hpp"
#include "gridcast/features.hpp"
#include "gridcast/gridstore.hpp"
#include "gridcast/hpo.hpp"
#include "gridcast/models/model.hpp"

namespace gridcast::bench {

struct GrowthSegment {
  double years = 1.0;
  double mw_per_year = 0.0;
};

enum class Link { Linear, Saturating };

struct SynthSpec {
  gridstore::Sector sector = gridstore::Sector::Solar;
  std::string start_date = "2014-01-01";
  std::size_t n_days = 3653;
  gridstore::GridSpec grid{42.0, 1.0, 8, -4.0, 1.25, 10};
  std::vector<std::string> variables;  // empty: sector defaults
  std::size_t n_facilities = 300;
  double initial_capacity_mw = 1000.0;
  /// Piecewise-linear additions after start_date; the last rate continues.
  std::vector<GrowthSegment> growth{{10.0, 800.0}};
  double seasonal_amplitude = 1.0;  // scales every variable's annual cycle
  double weather_noise = 1.0;       // scales every variable's anomaly
  double ar_coef = 0.7;             // day-to-day persistence of anomalies
  double spatial_length = 2.0;      // correlation length in cells
  double noise_sigma = 0.01;        // target noise, fraction of installed capacity
  Link link = Link::Linear;
  std::uint64_t seed = 1;

  void validate() const;
  nlohmann::json to_json() const;
  static SynthSpec from_json(const nlohmann::json& j);
};

struct ModelEntry {
  models::Family family = models::Family::Linear;
  hpo::HPSpace space;              // defaults to the family's shipped space
  models::Hyperparameters fixed;   // applied to every trial
};

struct ExperimentConfig {
  gridstore::Sector sector = gridstore::Sector::Solar;
  std::filesystem::path data_dir = "data";
  std::optional<SynthSpec> synth;
  std::vector<std::string> variables;  // empty: every GSF under weather/
  bool mi_selection = true;
  double mi_threshold = 0.2;
  int mi_k = 3;
  features::SplitSpec split = features::SplitSpec::defaults();
  std::vector<features::ViewKind> views{features::ViewKind::Average};
  std::vector<ModelEntry> models;
  std::vector<crossval::SchemeParams> schemes;  // the first one drives tuning
  hpo::SearchOptions search;
  std::vector<bool> detrend{false};
  int trend_period = 365;
  int trend_window = 731;
  bool trend_fit_all = true;  // false: fit on train+val and extend the trend linearly
  std::vector<std::size_t> sweep_sizes;
  int occlusion_patch = 5;
  int occlusion_stride = 2;
  int importance_repeats = 0;  // 0 disables permutation importance
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "out";
  std::string run_id;  // empty: derived from the config hash

  nlohmann::json source;  // document as loaded, for hashing

  void validate() const;
  static ExperimentConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
  static ExperimentConfig load(const std::filesystem::path& path);
};

/// FNV-1a 64 over the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& doc);

}  // namespace gridcast::bench
