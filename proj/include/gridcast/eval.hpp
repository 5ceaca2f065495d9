#pragma once

// Error metrics and attribution.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridcast/features.hpp"
#include "gridcast/models/cnn.hpp"
#include "gridcast/models/model.hpp"

namespace gridcast::eval {

double mae(std::span<const double> y, std::span<const double> yhat);
double rmse(std::span<const double> y, std::span<const double> yhat);
/// Percent. Throws ZeroTarget on any y == 0.
double mape(std::span<const double> y, std::span<const double> yhat);
/// Percent of the target range. Throws ConstantTarget.
double nrmse(std::span<const double> y, std::span<const double> yhat);
/// Throws ConstantTarget.
double r2(std::span<const double> y, std::span<const double> yhat);

struct MetricSet {
  double mae = 0.0;
  double mape = 0.0;   // NaN when every row was excluded
  double rmse = 0.0;
  double nrmse = 0.0;
  double r2 = 0.0;
  double y_min = 0.0, y_max = 0.0, y_mean = 0.0;
  std::size_t mape_excluded = 0;
};

struct MetricOptions {
  /// Skip rows with |y| < 1e-9 * max|y| in MAPE (counted) instead of failing.
  bool tolerate_zeros = false;
};

MetricSet metrics(std::span<const double> y, std::span<const double> yhat, const MetricOptions& options = {});

enum class Metric { Rmse, Mae, Nrmse };

double score(Metric m, std::span<const double> y, std::span<const double> yhat);

struct Importance {
  std::string feature;
  double mean = 0.0;  // permuted error minus baseline error
  double std = 0.0;
  std::vector<double> repeats;
};

/// Average view: one entry per column. Components view: one entry per
/// weather variable (all of its map columns permuted together) and per
/// scalar column. Results keep the view's column order; see `ranking`.
std::vector<Importance> permutation_importance(const models::FittedModel& model, const features::DatasetView& view,
                                               std::span<const std::size_t> rows, Metric metric, int n_repeats,
                                               std::uint64_t seed);
/// Feature indices sorted by decreasing mean importance.
std::vector<std::size_t> ranking(const std::vector<Importance>& importances);

struct OcclusionOptions {
  int patch = 5;
  int stride = 2;
  double baseline = 0.0;
  bool absolute = true;
};

struct AttributionMap {
  std::size_t nlat = 0, nlon = 0;
  std::vector<double> values;     // nlat * nlon, row-major; mean over covering placements
  std::vector<int> coverage;      // placements that covered each cell
  int patch = 0, stride = 0;
  double baseline = 0.0;

  double at(std::size_t i, std::size_t j) const { return values[i * nlon + j]; }
};

/// Slides a patch (all channels at once) over the grid, replaces it by the
/// baseline and records the prediction change. Cells no placement reaches
/// keep coverage 0 and value 0.
AttributionMap occlusion_map(const models::CnnRegressor& model, std::span<const double> image,
                             std::span<const double> scalars, const OcclusionOptions& options = {});
AttributionMap occlusion_map(const models::FittedModel& model, const features::DatasetView& view, std::size_t row,
                             const OcclusionOptions& options = {});

}  // namespace gridcast::eval
