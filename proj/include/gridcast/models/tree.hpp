#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gridcast/models/array_store.hpp"
#include "gridcast/rng.hpp"

namespace gridcast::models {

enum class LeafKind { Constant, Linear };

struct TreeParams {
  int max_depth = 8;
  int min_leaf = 5;
  LeafKind leaf_kind = LeafKind::Constant;
  /// Features examined per split; 0 means all.
  int max_features = 0;
  /// Ridge factor for linear leaves; the penalty is leaf_ridge * rows on
  /// features scaled by their spread over the tree's training rows.
  double leaf_ridge = 1e-3;
};

/// CART regression tree with squared-error splits.
class RegressionTree {
 public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;        // leaf mean (or linear-leaf intercept)
    int coef_offset = -1;      // into coefs_, linear leaves only
  };

  double predict_row(const double* x) const;
  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t leaf_count() const;
  std::size_t depth() const;
  std::size_t n_features() const { return n_features_; }

  void save(ArrayStore& store, const std::string& prefix) const;
  static RegressionTree load(const ArrayStore& store, const std::string& prefix);

 private:
  friend class TreeBuilder;
  std::vector<Node> nodes_;
  std::vector<double> coefs_;
  std::size_t n_features_ = 0;
};

/// Grows a tree on `rows` of (x, y); rows may repeat (bootstrap samples).
/// Needs rows.size() >= 2 * min_leaf to split at all; constant targets yield
/// a single leaf.
RegressionTree grow_tree(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         std::span<const std::size_t> rows, const TreeParams& params, Rng& rng);
RegressionTree grow_tree(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const TreeParams& params);

}  // namespace gridcast::models
