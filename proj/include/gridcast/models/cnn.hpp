#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gridcast/models/mlp.hpp"

namespace gridcast::models {

enum class Pooling { Max, Average, None };

std::string_view to_string(Pooling p);
Pooling parse_pooling(std::string_view text);

struct CnnArchitecture {
  int in_channels = 1;
  int nlat = 1;
  int nlon = 1;
  int n_scalars = 0;
  std::vector<int> conv_channels{8, 16};  // 3x3 kernels, stride 1, zero padding
  Pooling pooling = Pooling::Max;         // 2x2, skipped once a side drops below 2
  std::vector<int> dense_units{32};       // hidden dense layers before the scalar output
  Activation activation = Activation::Relu;

  nlohmann::json to_json() const;
  static CnnArchitecture from_json(const nlohmann::json& j);
};

/// Convolutional trunk, global average pooling, scalar side channel
/// concatenated, then a dense head. Parameters are one flat vector: each conv
/// layer's W (out, in, 3, 3) and b (out), then each dense layer's W (out x in,
/// row-major) and b (out).
class CnnNetwork {
 public:
  CnnNetwork() = default;
  explicit CnnNetwork(CnnArchitecture arch);

  const CnnArchitecture& architecture() const { return arch_; }
  std::size_t n_params() const { return n_params_; }

  double forward(const Eigen::VectorXd& params, std::span<const double> image,
                 std::span<const double> scalars) const;
  /// Mean squared error over the samples and its gradient.
  double loss_and_gradient(const Eigen::VectorXd& params, std::span<const std::vector<double>> images,
                           std::span<const std::vector<double>> scalars, std::span<const double> y,
                           Eigen::VectorXd& gradient) const;
  /// He/Glorot-uniform weights, zero biases.
  Eigen::VectorXd initial_params(std::uint64_t seed) const;

 private:
  struct ConvLayer {
    int in_c, out_c, h, w;    // input spatial size
    bool pooled;
    int out_h, out_w;         // after pooling
    std::size_t w_off, b_off;
  };
  struct DenseLayer {
    int in, out;
    std::size_t w_off, b_off;
  };
  struct Cache;

  double run(const Eigen::VectorXd& params, std::span<const double> image, std::span<const double> scalars,
             Cache* cache) const;
  void backward(const Eigen::VectorXd& params, const Cache& cache, double dout, Eigen::VectorXd& gradient) const;

  CnnArchitecture arch_;
  std::vector<ConvLayer> conv_;
  std::vector<DenseLayer> dense_;
  std::size_t n_params_ = 0;
};

struct CnnParams {
  int conv_layers = 2;
  int base_channels = 8;  // doubles per conv layer
  int dense_layers = 1;
  int dense_units = 32;
  Pooling pooling = Pooling::Max;
  Activation activation = Activation::Relu;
  double learning_rate = 0.01;
  double momentum = 0.9;
  int epochs = 30;
  int batch_size = 16;
  int patience = 5;
  double validation_fraction = 0.1;
};

class CnnRegressor {
 public:
  CnnRegressor() = default;
  /// Wraps a network with raw (unscaled) inputs and outputs.
  CnnRegressor(CnnNetwork net, Eigen::VectorXd params);

  static CnnRegressor fit(const features::ImageTensor& images, const Eigen::MatrixXd& scalars,
                          std::span<const std::size_t> rows, std::span<const double> y, const CnnParams& params,
                          std::uint64_t seed, TrainingDiagnostics* diagnostics = nullptr);

  double predict_sample(std::span<const double> image, std::span<const double> scalars) const;
  std::vector<double> predict(const features::ImageTensor& images, const Eigen::MatrixXd& scalars,
                              std::span<const std::size_t> rows) const;

  void save(ArrayStore& store, nlohmann::json& meta) const;
  static CnnRegressor load(const ArrayStore& store, const nlohmann::json& meta);

  const CnnNetwork& network() const { return net_; }
  const Eigen::VectorXd& params() const { return params_; }

 private:
  std::vector<double> scale_image(std::span<const double> image) const;
  std::vector<double> scale_scalars(std::span<const double> scalars) const;

  CnnNetwork net_;
  Eigen::VectorXd params_;
  Eigen::VectorXd channel_mean_, channel_scale_;
  Eigen::VectorXd scalar_mean_, scalar_scale_;
  double y_mean_ = 0.0, y_scale_ = 1.0;
};

}  // namespace gridcast::models
