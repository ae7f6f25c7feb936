#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blexpand/pipeline.hpp"

namespace blexpand {

// Plain-data mirror of the JSON report. Exact rationals travel as strings,
// complex numbers as [re, im].
using ComplexPair = std::array<double, 2>;

struct CheckDoc {
  std::string status;  // pass, fail, not-assessed
  std::string evidence;
  bool operator==(const CheckDoc&) const = default;
};

struct BasisDoc {
  std::vector<ComplexPair> roots;
  std::vector<int> multiplicities;
  int dimension = 0;
  double crossCheckError = 0;
  bool operator==(const BasisDoc&) const = default;
};

struct OperatorDoc {
  int classIndex = 0;  // 1-based
  std::string gamma;
  std::string symbol;
  bool zetaDependent = false;
  int mPlus = 0;
  bool isLayer = false;
  std::optional<BasisDoc> basis;
  std::string basisError;
  bool operator==(const OperatorDoc&) const = default;
};

struct ClassDoc {
  std::string gamma;
  int multiplicity = 0;
  std::string beta;
  bool operator==(const ClassDoc&) const = default;
};

struct SampleDoc {
  std::string parameter;
  double value = 0;
  std::string pattern;
  // empty classes and degree 0 when the profile failed
  int degree = 0;
  int regularCount = 0;
  std::vector<ClassDoc> classes;
  std::vector<OperatorDoc> operators;
  std::string operatorError;
  bool operator==(const SampleDoc&) const = default;
};

struct TurningPointDoc {
  double parameter = 0;
  double bracket = 0;
  std::string before, after;
  bool operator==(const TurningPointDoc&) const = default;
};

struct ExponentDoc {
  int classIndex = 0;
  std::string gamma;
  int mPlus = 0;
  bool isLayer = false;
  std::string symbol;
  bool operator==(const ExponentDoc&) const = default;
};

struct ComponentDoc {
  std::string id;
  std::vector<SampleDoc> samples;
  CheckDoc h1, h2, h3, h4;
  std::vector<TurningPointDoc> turningPoints;
  std::vector<ExponentDoc> exponents;
  bool operator==(const ComponentDoc&) const = default;
};

struct ClaimDoc {
  std::string component;
  int classIndex = 0;
  bool claimed = false;
  std::optional<bool> computed;
  bool agrees = false;
  std::string evidence;
  bool operator==(const ClaimDoc&) const = default;
};

struct ExpTermDoc {
  ComplexPair root{};
  std::vector<ComplexPair> poly;
  bool operator==(const ExpTermDoc&) const = default;
};

struct LayerTermDoc {
  std::string component;
  std::string gamma;
  int classIndex = 0;
  int mPlus = 0;
  std::vector<std::vector<ExpTermDoc>> orders;
  bool operator==(const LayerTermDoc&) const = default;
};

struct ExpansionDoc {
  std::string mode;  // "exp" for bvp1d, "sin k=1 A=1" style for strips
  int order = 0;
  int rhoDenominator = 1;
  double cutoffT = 0;
  std::string bookkeeping;
  std::vector<std::vector<ComplexPair>> interior;
  std::vector<LayerTermDoc> layers;
  bool operator==(const ExpansionDoc&) const = default;
};

struct ValidationRowDoc {
  double eps = 0, supError = 0, interiorResidual = 0, bcResidual = 0, condition = 0;
  bool operator==(const ValidationRowDoc&) const = default;
};

struct ValidationDoc {
  std::string problem;
  int order = 0;
  double predictedOrder = 0;
  std::optional<double> fittedOrder;  // empty: every error was exactly zero
  std::vector<ValidationRowDoc> rows;
  bool operator==(const ValidationDoc&) const = default;
};

struct Report {
  int schema = 1;
  std::string command;
  std::string spec;
  std::string title;
  std::vector<ComponentDoc> components;
  CheckDoc h5;
  std::vector<ClaimDoc> claims;
  std::vector<std::string> notes;
  std::vector<ExpansionDoc> expansions;
  std::optional<ValidationDoc> validation;
  int exitCode = 0;
  bool operator==(const Report&) const = default;
};

// Hypothesis section; `withBases` adds decaying profile bases per operator.
Report hypothesisReport(const HypothesisReport& rep, bool withBases);
ExpansionDoc expansionDoc(const ModeProblem& mode, const CompositeExpansion& comp);
ValidationDoc validationDoc(const ValidationResult& v);

// Deterministic: fixed key order, shortest round-trip doubles.
std::string emitJson(const Report& report);
Report parseJson(const std::string& text);

// Header eps,sup_error,interior_residual,bc_residual.
std::string emitCsv(const ValidationDoc& v);

std::string renderText(const Report& report);

}  // namespace blexpand
