#include "ltu/error.hpp"

namespace ltu {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::NonpositiveMass: return "NonpositiveMass";
    case ErrorCode::NonpositiveOutput: return "NonpositiveOutput";
    case ErrorCode::NonpositiveCoefficient: return "NonpositiveCoefficient";
    case ErrorCode::TaxOutOfRange: return "TaxOutOfRange";
    case ErrorCode::InvalidArrangement: return "InvalidArrangement";
    case ErrorCode::DegenerateOutcome: return "DegenerateOutcome";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::ZeroValue: return "ZeroValue";
    case ErrorCode::RayTermination: return "RayTermination";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotTU: return "NotTU";
    case ErrorCode::IsTU: return "IsTU";
    case ErrorCode::EmptyTypeSet: return "EmptyTypeSet";
    case ErrorCode::InputNotStable: return "InputNotStable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::ZeroValue || code == ErrorCode::RayTermination ||
         code == ErrorCode::Internal;
}

}  // namespace ltu
