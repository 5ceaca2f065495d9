#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace gridcast::features {

/// Principal components of a column-centered matrix. Each component's
/// largest-magnitude loading is positive.
struct PcaModel {
  Eigen::VectorXd mean;                      // p
  Eigen::MatrixXd components;                // p x k, orthonormal columns
  Eigen::VectorXd explained_variance;        // k, descending
  Eigen::VectorXd explained_variance_ratio;  // k, fraction of total variance

  std::size_t n_components() const { return static_cast<std::size_t>(components.cols()); }
  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd inverse_transform(const Eigen::MatrixXd& scores) const;
};

/// Rank-deficient inputs are accepted; trailing components then carry zero
/// variance.
PcaModel fit_pca(const Eigen::MatrixXd& x, std::size_t n_components);

}  // namespace gridcast::features
