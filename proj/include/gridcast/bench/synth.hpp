#pragma once

// Desk-scale synthetic stand-in for the gridded reanalysis + production corpus.

#include <filesystem>
#include <string>
#include <vector>

#include "gridcast/bench/config.hpp"

namespace gridcast::bench {

/// Per-variable generator settings (units are the generator's own).
struct VariableModel {
  std::string name;
  std::string unit;
  double base = 0.0;
  double seasonal = 0.0;   // annual cycle amplitude
  double phase_doy = 0.0;  // day of year of the cycle's peak
  double noise = 1.0;      // anomaly standard deviation
  double beta = 0.0;       // weight in the capacity-factor signal
  bool non_negative = false;
};

std::vector<VariableModel> default_variables(gridstore::Sector sector);

/// Installed capacity implied by the growth curve `days` after the start.
double capacity_curve(const SynthSpec& spec, double days);

struct SynthDataset {
  std::vector<gridstore::GridStack> weather;  // daily
  gridstore::FacilityRegistry facilities;
  gridstore::Series target;   // power_mw
  gridstore::Series price;    // price_eur_mwh
  std::vector<double> capacity_total;
  nlohmann::json truth;
};

/// Capacity factor per cell is link(sum_v beta_v * x_v); the target is the
/// capacity-weighted sum over cells plus noise proportional to installed
/// capacity.
SynthDataset synth_generate(const SynthSpec& spec);

/// weather/<var>.gsf, facilities.csv, target.csv, price.csv, truth.json.
void write_dataset(const SynthDataset& data, const std::filesystem::path& dir);

}  // namespace gridcast::bench
