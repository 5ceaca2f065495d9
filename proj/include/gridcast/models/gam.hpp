#pragma once

#include <vector>

#include "gridcast/models/model.hpp"

namespace gridcast::models {

struct GamParams {
  int n_knots = 10;  // knots spanning each feature's range, boundaries included
  double lambda = 1.0;
};

/// Uniform cubic B-spline basis over [lo, hi] with `n_knots` knots; n_knots + 2
/// functions. Outside the range the basis continues linearly from the
/// nearest boundary.
class SplineBasis {
 public:
  SplineBasis() = default;
  SplineBasis(double lo, double hi, int n_knots);

  int size() const { return n_knots_ + 2; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int n_knots() const { return n_knots_; }
  void evaluate(double x, double* out) const;

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  int n_knots_ = 4;
  double step_ = 1.0;
};

/// Additive model: intercept plus one penalized spline smooth per feature,
/// fitted by penalized least squares with a second-difference penalty.
class Gam final : public TabularRegressor {
 public:
  static Gam fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const GamParams& params);

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const override;
  void save(ArrayStore& store, nlohmann::json& meta) const override;
  static Gam load(const ArrayStore& store, const nlohmann::json& meta);

  /// Spline coefficients of feature f (empty for constant features).
  Eigen::VectorXd coefficients(std::size_t feature) const;
  /// Centered smooth of one feature evaluated at `values`.
  Eigen::VectorXd smooth(std::size_t feature, const Eigen::VectorXd& values) const;
  double intercept() const { return intercept_; }

 private:
  struct Term {
    bool active = false;
    SplineBasis basis;
    Eigen::VectorXd column_mean;
    Eigen::Index offset = 0;
  };
  std::vector<Term> terms_;
  Eigen::VectorXd beta_;
  double intercept_ = 0.0;
};

}  // namespace gridcast::models
