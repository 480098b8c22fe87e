#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coocc {

enum class ErrorCode {
  // data / input problems
  MalformedCsv,
  DuplicateCell,
  BadValue,
  IncompleteGrid,
  InvalidShape,
  MissingData,
  Unimputable,
  UnknownIdentifier,
  TooFewUnits,
  NeedMultiplePeriods,
  // index / model domain problems
  Undefined,
  BadParams,
  Infeasible,
  TooLarge,
  BadProbability,
  BadKernel,
  // numerical failures
  DegenerateData,
  SingularDenominator,
  IllConditionedBasis,
  EnsembleUnstable,
};

enum class ErrorCategory { Data, Numerical };

std::string_view error_name(ErrorCode code) noexcept;
ErrorCategory error_category(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` names the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coocc
