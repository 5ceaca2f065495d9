#pragma once

#include <cstdint>
#include <vector>

#include "gridcast/models/model.hpp"
#include "gridcast/models/tree.hpp"

namespace gridcast::models {

struct ForestParams {
  int n_trees = 100;
  TreeParams tree;  // max_features = 0 selects ceil(sqrt(p))
  bool bootstrap = true;
  unsigned jobs = 1;
};

class RandomForest final : public TabularRegressor {
 public:
  static RandomForest fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                          const ForestParams& params, std::uint64_t seed);

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const override;
  void save(ArrayStore& store, nlohmann::json& meta) const override;
  static RandomForest load(const ArrayStore& store, const nlohmann::json& meta);

  const std::vector<RegressionTree>& trees() const { return trees_; }

 private:
  std::vector<RegressionTree> trees_;
};

}  // namespace gridcast::models
