#pragma once

// Hyperparameter search spaces, random search and GP/EI Bayesian search.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gridcast/gp.hpp"
#include "gridcast/models/model.hpp"
#include "gridcast/rng.hpp"

namespace gridcast::hpo {

enum class DimKind { Int, Float, LogFloat, Categorical };

struct Dimension {
  std::string name;
  DimKind kind = DimKind::Float;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::string> choices;  // categorical only

  /// Width in the encoded unit cube (one-hot for categoricals).
  std::size_t width() const { return kind == DimKind::Categorical ? choices.size() : 1; }
};

/// Points are encoded in [0,1]^width: numeric dims map linearly (log-linearly
/// for log_float), categoricals are one-hot relaxed and decode to the argmax.
struct HPSpace {
  std::vector<Dimension> dims;

  void validate() const;
  std::size_t encoded_size() const;
  models::Hyperparameters decode(std::span<const double> u) const;
  std::vector<double> encode(const models::Hyperparameters& hp) const;
  /// Decode then re-encode: rounds integers and one-hot categoricals.
  std::vector<double> snap(std::span<const double> u) const;
  std::vector<double> sample(Rng& rng) const;

  nlohmann::json to_json() const;
  static HPSpace from_json(const nlohmann::json& j);
};

/// Shipped search space per model family.
HPSpace default_space(models::Family family);

struct Trial {
  std::size_t id = 0;
  std::vector<double> point;  // encoded
  models::Hyperparameters hyperparameters;
  std::optional<double> score;
  std::string error;          // set when the objective failed
  bool fallback = false;      // EI vanished everywhere; point drawn at random
};

struct SearchResult {
  std::vector<Trial> history;
  std::optional<std::size_t> best;  // index into history

  const Trial& best_trial() const;
};

/// Objective to minimize; throwing marks the trial failed.
using Objective = std::function<double(const models::Hyperparameters&, std::size_t trial_id)>;

enum class Algorithm { Random, Bayesian };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

struct SearchOptions {
  Algorithm algorithm = Algorithm::Random;
  std::size_t budget = 100;
  std::uint64_t seed = 0;
  std::size_t n_init = 5;          // random draws before the surrogate kicks in
  std::size_t n_candidates = 1000;
  std::size_t batch = 1;           // parallel width, constant-liar fill-in
  GpOptions gp;
};

SearchResult random_search(const HPSpace& space, const Objective& objective, std::size_t budget, std::uint64_t seed);
SearchResult bayesian_search(const HPSpace& space, const Objective& objective, const SearchOptions& options);
SearchResult search(const HPSpace& space, const Objective& objective, const SearchOptions& options);

struct Proposal {
  std::vector<double> point;
  double ei = 0.0;
  bool fallback = false;
};

/// Maximizes EI over `n_candidates` uniform (snapped) draws.
Proposal propose_ei(const GaussianProcess& gp, const HPSpace& space, double best_so_far, std::size_t n_candidates,
                    Rng& rng);

}  // namespace gridcast::hpo
