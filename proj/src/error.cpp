#include "knotchar/error.hpp"

namespace knotchar {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVariableMismatch: return "VARIABLE_MISMATCH";
    case ErrorCode::kMixedFields: return "MIXED_FIELDS";
    case ErrorCode::kUnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::kTooManyVariables: return "TOO_MANY_VARIABLES";
    case ErrorCode::kZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::kNotExact: return "NOT_EXACT";
    case ErrorCode::kNotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::kNotUnivariate: return "NOT_UNIVARIATE";
    case ErrorCode::kDegreeTooLow: return "DEGREE_TOO_LOW";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInvalidSpec: return "INVALID_SPEC";
    case ErrorCode::kH1NotZ: return "H1_NOT_Z";
    case ErrorCode::kDegeneratePresentation: return "DEGENERATE_PRESENTATION";
    case ErrorCode::kLongitudeCheckFailed: return "LONGITUDE_CHECK_FAILED";
    case ErrorCode::kDetNotOne: return "DET_NOT_ONE";
    case ErrorCode::kGcdDegenerate: return "GCD_DEGENERATE";
    case ErrorCode::kExcludedTauUnsupported: return "EXCLUDED_TAU_UNSUPPORTED";
    case ErrorCode::kZeroSlice: return "ZERO_SLICE";
    case ErrorCode::kTauOutOfRange: return "TAU_OUT_OF_RANGE";
    case ErrorCode::kReducibleSlicePoint: return "REDUCIBLE_SLICE_POINT";
    case ErrorCode::kLongitudeNotTriangular: return "LONGITUDE_NOT_TRIANGULAR";
    case ErrorCode::kEliminationCollapsed: return "ELIMINATION_COLLAPSED";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kInvalidTerms: return "INVALID_TERMS";
    case ErrorCode::kMethodMismatch: return "METHOD_MISMATCH";
    case ErrorCode::kCAssumptionViolated: return "C_ASSUMPTION_VIOLATED";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kInternalInconsistency: return "INTERNAL_INCONSISTENCY";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace knotchar
