#pragma once

#include <stdexcept>
#include <string>

namespace blexpand {

enum class ErrorCode {
  Structural,
  NegativeValuation,
  EmptyPolynomial,
  NonUniform,
  ZeroPolynomial,
  DegreeZero,
  ClusterViolation,
  RealAxisRoot,
  NonConstantMPlus,
  UnsupportedOperatorClass,
  Parse,
  UndefinedName,
  NonPolynomial,
  UnderdeterminedHierarchy,
  OverdeterminedHierarchy,
  SingularTraceSystem,
  IllConditioned,
  Unsupported,
  InvalidArgument,
  Internal,
};

const char* errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// 1-based line/column of the offending token in a spec file.
struct SourceSpan {
  int line = 0;
  int column = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceSpan span, const std::string& message);
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace blexpand
