#include "blexpand/error.hpp"

namespace blexpand {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "Structural";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ClusterViolation: return "ClusterViolation";
    case ErrorCode::RealAxisRoot: return "RealAxisRoot";
    case ErrorCode::NonConstantMPlus: return "NonConstantMPlus";
    case ErrorCode::UnsupportedOperatorClass: return "UnsupportedOperatorClass";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UndefinedName: return "UndefinedName";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::UnderdeterminedHierarchy: return "UnderdeterminedHierarchy";
    case ErrorCode::OverdeterminedHierarchy: return "OverdeterminedHierarchy";
    case ErrorCode::SingularTraceSystem: return "SingularTraceSystem";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, SourceSpan span, const std::string& message)
    : Error(code, std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span) {}

}  // namespace blexpand
