#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltu {

enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  LambdaOutOfRange,
  NonpositiveMass,
  NonpositiveOutput,
  NonpositiveCoefficient,
  TaxOutOfRange,
  InvalidArrangement,
  DegenerateOutcome,
  InvalidProfile,
  NotAnEquilibrium,
  ZeroValue,
  RayTermination,
  IterationLimit,
  BudgetExceeded,
  NotTU,
  IsTU,
  EmptyTypeSet,
  InputNotStable,
  CapExceeded,
  Internal,
};

std::string_view error_name(ErrorCode code);

/// True for codes that signal a broken internal invariant rather than bad
/// input or a negative verification result.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ltu
