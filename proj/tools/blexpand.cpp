// blexpand: boundary-layer exponents, layer operators and composite
// expansions from operator spec files.
//
// Exit codes: 0 ok, 1 hypothesis failure (report still written), 2 input
// error, 3 internal error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "blexpand/demo.hpp"
#include "blexpand/error.hpp"

namespace {

using namespace blexpand;

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

int finish(const Report& report, const std::string& jsonPath, const std::string& csvPath) {
  std::cout << renderText(report);
  if (!jsonPath.empty()) writeFile(jsonPath, emitJson(report));
  if (!csvPath.empty()) {
    if (!report.validation) throw Error(ErrorCode::InvalidArgument, "--csv needs a validation table");
    writeFile(csvPath, emitCsv(*report.validation));
  }
  return report.exitCode;
}

bool isHierarchyFailure(ErrorCode code) {
  return code == ErrorCode::UnderdeterminedHierarchy || code == ErrorCode::OverdeterminedHierarchy ||
         code == ErrorCode::SingularTraceSystem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-layer exponents and composite expansions for singularly perturbed operators"};
  app.require_subcommand(1);

  std::string specArg, jsonPath, csvPath, epsGrid = "1e-2:1e-5:7", demoName;
  int order = 0;

  auto* analyze = app.add_subcommand("analyze", "singular exponents and hypotheses H1-H5");
  auto* layers = app.add_subcommand("layers", "layer operators and decaying profile bases");
  auto* expand = app.add_subcommand("expand", "composite expansion to a given order");
  auto* validateCmd = app.add_subcommand("validate", "composite against the extended-precision reference");
  auto* demo = app.add_subcommand("demo", "shipped scenarios");
  for (auto* sub : {analyze, layers, expand, validateCmd})
    sub->add_option("spec", specArg, "spec file, or the name of a shipped spec")->required();
  for (auto* sub : {expand, validateCmd})
    sub->add_option("--order,-K", order, "truncation order")->check(CLI::Range(0, 12));
  validateCmd->add_option("--eps-grid", epsGrid, "geometric grid a:b:n");
  demo->add_option("name", demoName, "qg-munk, qg-stommel, qg-disc, ode1 or ode-munk")
      ->required()
      ->check(CLI::IsMember(demoNames()));
  for (auto* sub : {analyze, layers, expand, validateCmd, demo}) {
    sub->add_option("--json", jsonPath, "write the machine report here");
    sub->add_option("--csv", csvPath, "write the (eps, error) table here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (demo->parsed()) return finish(runDemo(demoName), jsonPath, csvPath);

    dsl::OperatorSpec spec = dsl::parseSpec(loadSpecText(specArg));
    HypothesisReport hyp = analyzeWithH5(spec);
    Report report = hypothesisReport(hyp, layers->parsed());
    report.command = app.get_subcommands().front()->get_name();
    if (expand->parsed() || validateCmd->parsed()) {
      try {
        SpecExpansion exp = expandSpec(spec, order);
        for (std::size_t k = 0; k < exp.modes.size(); ++k)
          report.expansions.push_back(expansionDoc(exp.modes[k], exp.composites[k]));
        if (validateCmd->parsed())
          report.validation = validationDoc(validateSpec(spec, order, parseEpsGrid(epsGrid)));
      } catch (const Error& e) {
        if (!isHierarchyFailure(e.code())) throw;
        report.notes.push_back(e.what());
        report.exitCode = 1;
      }
    }
    return finish(report, jsonPath, csvPath);
  } catch (const Error& e) {
    std::cerr << "blexpand: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "blexpand: internal error: " << e.what() << "\n";
    return 3;
  }
}
