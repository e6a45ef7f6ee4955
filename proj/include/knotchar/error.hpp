#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotchar {

enum class ErrorCode {
  kVariableMismatch,
  kMixedFields,
  kUnknownVariable,
  kTooManyVariables,
  kZeroPolynomial,
  kNotExact,
  kNotSymmetric,
  kNotUnivariate,
  kDegreeTooLow,
  kInvalidArgument,
  kInvalidSpec,
  kH1NotZ,
  kDegeneratePresentation,
  kLongitudeCheckFailed,
  kDetNotOne,
  kGcdDegenerate,
  kExcludedTauUnsupported,
  kZeroSlice,
  kTauOutOfRange,
  kReducibleSlicePoint,
  kLongitudeNotTriangular,
  kEliminationCollapsed,
  kParseError,
  kInvalidTerms,
  kMethodMismatch,
  kCAssumptionViolated,
  kIoError,
  kInternalInconsistency,
};

/// Upper-snake identifier used in diagnostics and JSON output, e.g. "NOT_SYMMETRIC".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace knotchar
