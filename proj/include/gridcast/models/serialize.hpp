#pragma once

#include <filesystem>

#include "gridcast/models/model.hpp"

namespace gridcast::models {

/// Writes `<dir>/model.json` (format "gridcast-model", version 1) and the
/// little-endian float64 sidecar `<dir>/model.bin`.
void save_model(const FittedModel& model, const std::filesystem::path& dir);
FittedModel load_model(const std::filesystem::path& dir);

}  // namespace gridcast::models
