#pragma once

// Gaussian-process surrogate with a Matern-5/2 ARD kernel.

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace gridcast::hpo {

double matern52(double r);

struct GpOptions {
  std::vector<double> length_grid{0.05, 0.1, 0.2, 0.4, 0.8, 1.6};
  std::vector<double> noise_grid{1e-6, 1e-4, 1e-3, 1e-2, 1e-1};
  /// Fixes the noise variance (standardized units) instead of searching it.
  std::optional<double> fixed_noise;
  int coordinate_passes = 2;
};

struct GpPrediction {
  double mean = 0.0;
  double sd = 0.0;
};

class GaussianProcess {
 public:
  /// x: one row per point inside the unit cube; y: raw scores. Scores are
  /// standardized internally (zero spread keeps unit scale).
  static GaussianProcess fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const GpOptions& options = {});

  GpPrediction predict(const Eigen::VectorXd& point) const;

  const Eigen::VectorXd& length_scales() const { return lengths_; }
  double noise() const { return noise_; }
  double jitter() const { return jitter_; }
  double log_marginal_likelihood() const { return lml_; }

 private:
  double kernel(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;

  Eigen::MatrixXd x_;
  Eigen::VectorXd lengths_;
  double noise_ = 0.0;
  double jitter_ = 0.0;
  double y_mean_ = 0.0, y_scale_ = 1.0;
  Eigen::LLT<Eigen::MatrixXd> chol_;
  Eigen::VectorXd alpha_;
  double lml_ = 0.0;
};

/// E[max(0, best - f)] for f ~ N(mean, sd^2); minimization convention.
double expected_improvement(double mean, double sd, double best);

}  // namespace gridcast::hpo
