#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace gridcast::models {

/// Named float64 arrays packed into one sidecar buffer; the JSON side keeps
/// {offset, length} per name.
class ArrayStore {
 public:
  ArrayStore() = default;
  ArrayStore(nlohmann::json index, std::vector<double> blob)
      : index_(std::move(index)), blob_(std::move(blob)) {}

  void put(const std::string& name, std::span<const double> values);
  void put(const std::string& name, const Eigen::VectorXd& values) {
    put(name, std::span<const double>(values.data(), static_cast<std::size_t>(values.size())));
  }
  void put(const std::string& name, const Eigen::MatrixXd& values);

  std::vector<double> get(const std::string& name) const;
  Eigen::VectorXd get_vector(const std::string& name) const;
  Eigen::MatrixXd get_matrix(const std::string& name) const;

  const nlohmann::json& index() const { return index_; }
  const std::vector<double>& blob() const { return blob_; }

 private:
  nlohmann::json index_ = nlohmann::json::object();
  std::vector<double> blob_;
};

}  // namespace gridcast::models
