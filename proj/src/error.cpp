#include "coocc/error.hpp"

namespace coocc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::IncompleteGrid: return "IncompleteGrid";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::MissingData: return "MissingData";
    case ErrorCode::Unimputable: return "Unimputable";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::TooFewUnits: return "TooFewUnits";
    case ErrorCode::NeedMultiplePeriods: return "NeedMultiplePeriods";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::BadKernel: return "BadKernel";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::IllConditionedBasis: return "IllConditionedBasis";
    case ErrorCode::EnsembleUnstable: return "EnsembleUnstable";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateData:
    case ErrorCode::SingularDenominator:
    case ErrorCode::IllConditionedBasis:
    case ErrorCode::EnsembleUnstable:
    case ErrorCode::Undefined:
    case ErrorCode::BadParams:
    case ErrorCode::Infeasible:
    case ErrorCode::TooLarge:
    case ErrorCode::BadProbability:
    case ErrorCode::BadKernel:
      return ErrorCategory::Numerical;
    default:
      return ErrorCategory::Data;
  }
}

}  // namespace coocc
