#pragma once

#include <vector>

#include "gridcast/models/model.hpp"
#include "gridcast/models/tree.hpp"

namespace gridcast::models {

struct GbtParams {
  int n_rounds = 100;
  double learning_rate = 0.1;
  TreeParams tree{3, 5, LeafKind::Constant, 0, 1e-8};
};

/// Stagewise additive trees on squared-loss residuals.
class GradientBoosting final : public TabularRegressor {
 public:
  static GradientBoosting fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                              const GbtParams& params, std::uint64_t seed);

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const override;
  void save(ArrayStore& store, nlohmann::json& meta) const override;
  static GradientBoosting load(const ArrayStore& store, const nlohmann::json& meta);

  /// Training MSE after each round (index 0 = after round 1).
  const std::vector<double>& training_loss() const { return training_loss_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }
  double base() const { return base_; }

 private:
  double base_ = 0.0;
  double learning_rate_ = 0.1;
  std::vector<RegressionTree> trees_;
  std::vector<double> training_loss_;
};

}  // namespace gridcast::models
