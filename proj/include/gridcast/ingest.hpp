#pragma once

// Raw registries, weather stacks and calendars -> capacity-weighted inputs and
// auxiliary feature columns.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gridcast/gridstore.hpp"

namespace gridcast::ingest {

using gridstore::FacilityRegistry;
using gridstore::GridSpec;
using gridstore::GridStack;
using gridstore::Sector;
using gridstore::Series;
using gridstore::TimeAxis;

/// Installed capacity P[t, i, j] in MW.
struct CapacityGrid {
  GridSpec spec;
  TimeAxis time;
  std::vector<double> capacity_mw;  // (nt, nlat, nlon)

  double total() const;
  /// Sum over cells at time step t.
  double total_at(std::size_t t) const;
};

/// Capacity weights normalized over time and space: sum over (t, i, j) is 1.
struct WeightGrid {
  GridSpec spec;
  TimeAxis time;
  std::vector<double> w;  // (nt, nlat, nlon)
};

struct FeatureColumn {
  std::string name;  // time_index, doy_cos, sunshine_hours or price
  Series series;
};

struct LoadedRegistry {
  FacilityRegistry registry;
  std::size_t rows = 0;          // data rows in the file
  std::size_t dropped = 0;       // missing capacity or location
  std::size_t off_sector = 0;    // rows of another sector
  double drop_fraction() const {
    return rows == 0 ? 0.0 : static_cast<double>(dropped) / static_cast<double>(rows);
  }
};

LoadedRegistry load_facilities(const std::filesystem::path& path, Sector sector);

struct Assignment {
  CapacityGrid grid;
  std::vector<std::string> rejected;  // facility ids outside the grid
};

/// Adds each facility's capacity to its nearest cell for every step where it
/// is active. Facilities up to one cell outside the grid are snapped to the
/// border; anything further is rejected (or throws OutOfDomain when strict).
Assignment assign_to_grid(const FacilityRegistry& registry, const GridSpec& spec,
                          const TimeAxis& time, bool strict = false);

WeightGrid compute_weights(const CapacityGrid& capacity);

/// Elementwise weather x weight in float64. NaN weather under zero weight is
/// masked to 0; NaN under positive weight throws NaNUnderWeight.
std::vector<double> weighted_values(const GridStack& stack, const WeightGrid& weights);
/// Same product stored as a float32 stack named "w_<var>".
GridStack weight_weather(const GridStack& stack, const WeightGrid& weights);

/// Day length in hours for a 1-based day of year at the given latitude.
double sunshine_hours(int day_of_year, double lat_deg);
double solar_declination_deg(int day_of_year);

/// Emits time_index plus doy_cos (Wind) or sunshine_hours at the reference
/// point (Solar).
std::vector<FeatureColumn> temporal_features(const TimeAxis& time, double lat_ref, double lon_ref,
                                             Sector sector);

/// Sunshine duration for every cell and step, for per-cell weighting.
GridStack sunshine_grid(const GridSpec& spec, const TimeAxis& time);

FeatureColumn load_price(const std::filesystem::path& path);

struct MiOptions {
  int k = 3;
  double threshold = 0.20;
  std::uint64_t seed = 0;
};

struct MiSelection {
  std::vector<std::string> names;       // candidate order
  std::vector<double> scores;           // raw estimates, nats
  std::vector<double> normalized;       // scores / max score
  std::vector<std::string> selected;
};

MiSelection select_variables_mi(const std::vector<Series>& candidates, const Series& target,
                                const MiOptions& options = {});

enum class Aggregation { Mean, Sum };

/// Aggregation rule for a weather variable name (accumulated fields sum).
Aggregation default_aggregation(std::string_view var);

Series aggregate_to_daily(const Series& series, Aggregation how);
GridStack aggregate_to_daily(const GridStack& stack, Aggregation how);

}  // namespace gridcast::ingest
