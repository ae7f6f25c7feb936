#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blexpand/dsl/spec_file.hpp"
#include "blexpand/layer.hpp"
#include "blexpand/profile.hpp"

namespace blexpand {

struct Check {
  enum class Status { Pass, Fail, NotAssessed };
  Status status = Status::NotAssessed;
  std::string evidence;

  bool failed() const { return status == Status::Fail; }
  static Check pass(std::string why) { return {Status::Pass, std::move(why)}; }
  static Check fail(std::string why) { return {Status::Fail, std::move(why)}; }
  static Check notAssessed(std::string why) { return {Status::NotAssessed, std::move(why)}; }
};
const char* statusName(Check::Status s);

struct SampleAnalysis {
  std::string parameter;  // exact text of the boundary parameter
  double value = 0;
  std::optional<SingularProfile> profile;  // empty when not uniform in zeta
  std::string pattern;                     // pattern text, or the error
  std::vector<LayerOperator> operators;
  std::string operatorError;
};

struct TurningPoint {
  double parameter = 0;
  double bracket = 0;  // width of the final bisection interval
  std::string before, after;
};

struct LayerExponent {
  int classIndex = 0;  // 1-based, increasing gamma
  Rational gamma;
  int mPlus = 0;
  bool isLayer = false;
  std::string symbol;  // layer operator at the first sample
};

struct ComponentReport {
  std::string component;
  std::vector<SampleAnalysis> samples;
  Check h1, h2, h3, h4;
  std::vector<TurningPoint> turningPoints;
  std::vector<LayerExponent> exponents;  // filled when h3 passes
};

struct ClaimCheck {
  dsl::LayerClaim claim;
  std::optional<bool> computed;  // empty when the class does not exist
  bool agrees = false;
  std::string evidence;
};

struct HypothesisReport {
  std::string spec;
  std::string title;
  std::vector<ComponentReport> components;
  Check h5;
  std::vector<ClaimCheck> claims;
  std::vector<std::string> notes;

  bool anyFailure() const;
};

// Profiles at every boundary sample, hypotheses (H1)-(H4) for one
// component, and turning points located by bisection on the parameter.
ComponentReport scanComponent(const dsl::OperatorSpec& spec, const std::string& component,
                              double turningTolerance = 1e-4);

// All components plus recorded claims. (H5) is left not assessed here.
HypothesisReport analyzeSpec(const dsl::OperatorSpec& spec);

}  // namespace blexpand
