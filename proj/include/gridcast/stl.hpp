#pragma once

#include <span>
#include <vector>

namespace gridcast::features {

struct StlOptions {
  int period = 365;
  int seasonal_window = 7;
  /// Trend smoother span in samples (made odd).
  int trend_window = 731;
  /// Low-pass smoother span; 0 picks the smallest odd integer > period.
  int low_pass_window = 0;
  int inner_iterations = 2;
};

struct StlDecomposition {
  std::vector<double> trend;
  std::vector<double> seasonal;
  std::vector<double> remainder;
};

/// Seasonal-trend decomposition by loess (inner loop only, degree-1
/// smoothers, no robustness weights). Throws SeriesTooShort when the series
/// covers fewer than two periods.
StlDecomposition stl_decompose(std::span<const double> values, const StlOptions& options = {});

struct Detrended {
  std::vector<double> trend;
  /// values - trend; the seasonal cycle stays in the residual.
  std::vector<double> residual;
};

Detrended stl_detrend(std::span<const double> values, int period = 365, int trend_window = 731);

/// Local regression of `values` (observed at 0..n-1) evaluated at arbitrary
/// positions using the `span` nearest points and tricube weights.
std::vector<double> loess(std::span<const double> values, int span, int degree,
                          std::span<const double> positions);

}  // namespace gridcast::features
