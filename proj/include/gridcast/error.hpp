#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridcast {

/// Every failure the toolkit reports carries one of these codes.
enum class Errc {
  // file formats
  MagicMismatch,
  HeaderParse,
  PayloadTruncated,
  IoFailure,
  NonUniformTimestep,
  DuplicateTimestamp,
  NonNumericValue,
  // registries and weighting
  UnknownSector,
  NegativeCapacity,
  DuplicateFacility,
  OutOfDomain,
  AllZeroCapacity,
  AxisMismatch,
  NaNUnderWeight,
  MisalignedDay,
  // features
  SeriesTooShort,
  WindowOutOfRange,
  // models
  ViewKindMismatch,
  SchemaMismatch,
  NonFiniteLoss,
  SingularSystem,
  InvalidParameter,
  // cross-validation / search
  TooFewSamples,
  SizeExceedsWindow,
  IllConditioned,
  ObjectiveFailure,
  // metrics / attribution
  ZeroTarget,
  ConstantTarget,
  SingleRow,
  PatchTooLarge,
  // orchestration
  MissingArtifacts,
  ConfigInvalid,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gridcast
