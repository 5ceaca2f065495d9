#pragma once

// Uniform fit/predict surface over every model family.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "gridcast/features.hpp"
#include "gridcast/models/array_store.hpp"
#include "gridcast/pca.hpp"

namespace gridcast::models {

enum class Family { Linear, Forest, LinearForest, Gbt, LinearGbt, Gam, Mlp, Cnn };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

/// Numbers (integers included) are stored as double, categoricals as text.
using HpValue = std::variant<double, std::string>;

class Hyperparameters {
 public:
  Hyperparameters() = default;
  Hyperparameters(std::initializer_list<std::pair<const std::string, HpValue>> init) : values_(init) {}

  void set(const std::string& name, HpValue value) { values_[name] = std::move(value); }
  bool contains(const std::string& name) const { return values_.count(name) != 0; }

  double get_double(const std::string& name, double fallback) const;
  long get_int(const std::string& name, long fallback) const;
  std::string get_string(const std::string& name, const std::string& fallback) const;

  const std::map<std::string, HpValue>& values() const { return values_; }

  nlohmann::json to_json() const;
  static Hyperparameters from_json(const nlohmann::json& j);

  bool operator==(const Hyperparameters&) const = default;

 private:
  std::map<std::string, HpValue> values_;
};

struct ModelSpec {
  Family family = Family::Linear;
  Hyperparameters hyperparameters;
  std::uint64_t seed = 0;
};

/// Hyperparameter names accepted by a family (plus "pca_components" for the
/// components view).
const std::vector<std::string>& known_hyperparameters(Family family);
/// Rejects unknown names and out-of-range values with InvalidParameter.
void validate(const ModelSpec& spec);

class TabularRegressor {
 public:
  virtual ~TabularRegressor() = default;
  virtual Eigen::VectorXd predict(const Eigen::MatrixXd& x) const = 0;
  virtual void save(ArrayStore& store, nlohmann::json& meta) const = 0;
};

struct TrainingDiagnostics {
  std::vector<double> loss_curve;
  std::size_t iterations = 0;
};

class CnnRegressor;

struct FittedModel {
  ModelSpec spec;
  features::ViewKind kind = features::ViewKind::Average;
  std::vector<std::string> feature_names;
  std::vector<std::string> scalar_names;
  std::vector<std::string> channel_names;
  std::size_t nlat = 0;
  std::size_t nlon = 0;
  std::optional<features::PcaModel> pca;
  std::shared_ptr<const TabularRegressor> tabular;
  std::shared_ptr<const CnnRegressor> cnn;
  TrainingDiagnostics diagnostics;
};

/// Design matrix for a tabular family: the Average view's columns, or for the
/// components view the PCA scores followed by the scalar columns.
Eigen::MatrixXd tabular_design(const features::DatasetView& view, std::span<const std::size_t> rows,
                               const features::PcaModel* pca);

FittedModel fit(const ModelSpec& spec, const features::DatasetView& view,
                std::span<const std::size_t> rows);
std::vector<double> predict(const FittedModel& model, const features::DatasetView& view,
                            std::span<const std::size_t> rows);

/// Fits a tabular family directly on a design matrix.
std::shared_ptr<const TabularRegressor> fit_tabular(const ModelSpec& spec, const Eigen::MatrixXd& x,
                                                    const Eigen::VectorXd& y,
                                                    TrainingDiagnostics* diagnostics = nullptr);

std::vector<std::size_t> all_rows(std::size_t n);

/// Worker threads used inside a single fit (forest trees). Results do not
/// depend on it.
void set_fit_threads(unsigned threads);
unsigned fit_threads();

}  // namespace gridcast::models
