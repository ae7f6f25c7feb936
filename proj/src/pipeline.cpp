#include "blexpand/pipeline.hpp"

#include "blexpand/error.hpp"

namespace blexpand {

std::vector<ModeProblem> specModes(const dsl::OperatorSpec& spec) {
  if (!spec.problem) throw Error(ErrorCode::InvalidArgument, "spec '" + spec.name + "' has no [problem] section");
  if (spec.problem->kind == "bvp1d") return {ModeProblem{"exp", 0, 1, problemFromSpec(spec)}};
  return stripModes(spec);
}

SpecExpansion expandSpec(const dsl::OperatorSpec& spec, int K) {
  SpecExpansion out;
  out.modes = specModes(spec);
  for (const auto& m : out.modes) out.composites.push_back(solveHierarchy1D(m.problem, K));
  return out;
}

ValidationResult validateSpec(const dsl::OperatorSpec& spec, int K, const std::vector<double>& epsGrid) {
  return validateModes(spec.name, specModes(spec), K, epsGrid);
}

Check assessH5(const dsl::OperatorSpec& spec) {
  if (!spec.problem) return Check::notAssessed("no boundary value problem given");
  std::vector<ModeProblem> modes;
  try {
    modes = specModes(spec);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unsupported) return Check::notAssessed(e.what());
    throw;
  }
  std::string evidence;
  for (const auto& m : modes) {
    try {
      CompositeExpansion comp = solveHierarchy1D(m.problem, 0);
      if (!evidence.empty()) evidence += "; ";
      evidence += comp.bookkeeping.str();
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::UnderdeterminedHierarchy:
        case ErrorCode::OverdeterminedHierarchy:
        case ErrorCode::SingularTraceSystem:
          return Check::fail(e.what());
        case ErrorCode::Unsupported:
          return Check::notAssessed(e.what());
        default:
          throw;
      }
    }
  }
  return Check::pass(evidence);
}

HypothesisReport analyzeWithH5(const dsl::OperatorSpec& spec) {
  HypothesisReport rep = analyzeSpec(spec);
  rep.h5 = assessH5(spec);
  return rep;
}

}  // namespace blexpand
