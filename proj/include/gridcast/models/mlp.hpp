#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gridcast/models/model.hpp"

namespace gridcast::models {

enum class Activation { Tanh, Relu, Identity };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view text);

double activate(Activation a, double z);
/// Derivative expressed through the pre-activation z.
double activate_grad(Activation a, double z);

/// Fully connected network with a linear scalar output. Parameters live in a
/// flat vector, layer by layer: W (out x in, row-major) then b (out).
class MlpNetwork {
 public:
  MlpNetwork() = default;
  MlpNetwork(std::vector<int> layer_sizes, Activation activation);

  std::size_t n_params() const { return n_params_; }
  const std::vector<int>& layer_sizes() const { return sizes_; }
  Activation activation() const { return activation_; }

  Eigen::VectorXd forward(const Eigen::VectorXd& params, const Eigen::MatrixXd& x) const;
  /// Mean squared error over the batch and its gradient w.r.t. params.
  double loss_and_gradient(const Eigen::VectorXd& params, const Eigen::MatrixXd& x,
                           const Eigen::VectorXd& y, Eigen::VectorXd& gradient) const;
  /// Glorot-uniform weights, zero biases.
  Eigen::VectorXd initial_params(std::uint64_t seed) const;

 private:
  std::vector<int> sizes_;
  Activation activation_ = Activation::Tanh;
  std::size_t n_params_ = 0;
};

struct MlpParams {
  int hidden_layers = 1;
  int hidden_units = 32;
  Activation activation = Activation::Tanh;
  double learning_rate = 0.01;
  double momentum = 0.9;
  int epochs = 200;
  int batch_size = 32;  // 0 means full batch
  int patience = 20;
  /// Trailing share of the rows held out for early stopping; 0 monitors the
  /// training loss instead.
  double validation_fraction = 0.1;
};

class Mlp final : public TabularRegressor {
 public:
  static Mlp fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const MlpParams& params,
                 std::uint64_t seed, TrainingDiagnostics* diagnostics = nullptr);

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const override;
  void save(ArrayStore& store, nlohmann::json& meta) const override;
  static Mlp load(const ArrayStore& store, const nlohmann::json& meta);

  const MlpNetwork& network() const { return net_; }
  const Eigen::VectorXd& params() const { return params_; }

 private:
  MlpNetwork net_;
  Eigen::VectorXd params_;
  Eigen::VectorXd x_mean_, x_scale_;
  double y_mean_ = 0.0, y_scale_ = 1.0;
};

/// Column means and standard deviations (zero spread maps to 1).
void column_scaling(const Eigen::MatrixXd& x, Eigen::VectorXd& mean, Eigen::VectorXd& scale);

}  // namespace gridcast::models
