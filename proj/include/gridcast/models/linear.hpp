#pragma once

#include "gridcast/models/model.hpp"

namespace gridcast::models {

/// Least squares with intercept; `alpha` > 0 adds a ridge penalty on the
/// standardized coefficients.
class LinearRegression final : public TabularRegressor {
 public:
  LinearRegression() = default;
  LinearRegression(Eigen::VectorXd coef, double intercept)
      : coef_(std::move(coef)), intercept_(intercept) {}

  static LinearRegression fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, double alpha = 0.0);

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const override;
  void save(ArrayStore& store, nlohmann::json& meta) const override;
  static LinearRegression load(const ArrayStore& store, const nlohmann::json& meta);

  const Eigen::VectorXd& coefficients() const { return coef_; }
  double intercept() const { return intercept_; }

 private:
  Eigen::VectorXd coef_;
  double intercept_ = 0.0;
};

}  // namespace gridcast::models
