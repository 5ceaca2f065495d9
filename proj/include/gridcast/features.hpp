#pragma once

// Model-ready dataset views, chronological splits and trend handling.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gridcast/gridstore.hpp"
#include "gridcast/ingest.hpp"

namespace gridcast::features {

using gridstore::GridSpec;
using gridstore::GridStack;
using gridstore::TimeAxis;

enum class ViewKind { Average, Components, Image };

std::string_view to_string(ViewKind kind);
ViewKind parse_view_kind(std::string_view text);

/// Dense (n, channels, nlat, nlon) tensor, row-major.
struct ImageTensor {
  std::size_t n = 0;
  std::size_t channels = 0;
  std::size_t nlat = 0;
  std::size_t nlon = 0;
  std::vector<double> data;

  std::size_t sample_size() const { return channels * nlat * nlon; }
  std::span<const double> sample(std::size_t row) const {
    return {data.data() + row * sample_size(), sample_size()};
  }
  std::span<double> sample(std::size_t row) {
    return {data.data() + row * sample_size(), sample_size()};
  }
};

/// Daily (X, y) in one of three shapes:
///  - Average: x_tab holds per-variable spatial means then the scalar columns.
///  - Components: x_tab holds the flattened weighted maps of every variable
///    (PCA is fitted inside the model on its training rows); x_scalar holds
///    price and temporal columns.
///  - Image: x_img holds one channel per weighted variable; x_scalar the
///    scalar side channel.
struct DatasetView {
  ViewKind kind = ViewKind::Average;
  TimeAxis time;
  GridSpec grid;
  Eigen::MatrixXd x_tab;
  std::vector<std::string> feature_names;
  ImageTensor x_img;
  std::vector<std::string> channel_names;
  Eigen::MatrixXd x_scalar;
  std::vector<std::string> scalar_names;
  std::vector<double> y;
  std::string target_name = "power_mw";

  std::size_t rows() const { return y.size(); }
  void validate() const;
};

/// Per-variable spatial mean for every day; one column per stack.
Eigen::MatrixXd spatial_average(std::span<const GridStack> weighted);

DatasetView build_average_view(std::span<const GridStack> weighted,
                               std::span<const ingest::FeatureColumn> scalars,
                               const gridstore::Series& target);
DatasetView build_components_view(std::span<const GridStack> weighted,
                                  std::span<const ingest::FeatureColumn> scalars,
                                  const gridstore::Series& target);
DatasetView build_image_view(std::span<const GridStack> weighted,
                             std::span<const ingest::FeatureColumn> scalars,
                             const gridstore::Series& target);

/// Inclusive window ends: train = [start, train_end], validation =
/// (train_end, val_end], test = (val_end, test_end].
struct SplitSpec {
  Date train_end;
  Date val_end;
  Date test_end;

  static SplitSpec defaults();  // 2021-12-31 / 2022-12-31 / 2023-12-31
};

struct ChronologicalSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
};

ChronologicalSplit make_chronological_split(const TimeAxis& time, const SplitSpec& spec);

/// Stored per-column trends. Detrending subtracts them, retrending adds them
/// back.
struct TrendModel {
  int period = 365;
  int trend_window = 731;
  std::vector<std::string> columns;  // x_tab column names and/or the target name
  std::vector<std::vector<double>> trends;

  const std::vector<double>* find(const std::string& column) const;
};

struct TrendOptions {
  int period = 365;
  int trend_window = 731;
  /// Fit on rows [0, fit_rows) only and extend linearly past them; 0 fits the
  /// whole series (the estimate then sees the evaluation period).
  std::size_t fit_rows = 0;
};

/// Fits trends for every weighted-weather column ("w_" prefix) of an Average
/// view and for the target.
TrendModel fit_trends(const DatasetView& view, const TrendOptions& options = {});
DatasetView detrend(const DatasetView& view, const TrendModel& trends);
/// Adds the target trend at `rows` back onto model output.
std::vector<double> retrend_target(std::span<const double> residual_predictions,
                                   std::span<const std::size_t> rows, const TrendModel& trends,
                                   const std::string& target_name);

/// Directory layout: manifest.json, x.csv, scalars.csv, y.csv, channel_<k>.gsf.
void save_view(const DatasetView& view, const std::filesystem::path& dir);
DatasetView load_view(const std::filesystem::path& dir);

}  // namespace gridcast::features
