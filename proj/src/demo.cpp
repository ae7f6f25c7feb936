#include "blexpand/demo.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blexpand/embedded_specs.hpp"
#include "blexpand/error.hpp"

namespace blexpand {

std::string loadSpecText(const std::string& pathOrName) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(pathOrName, ec)) {
    std::ifstream in(pathOrName);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + pathOrName + "'");
    return ss.str();
  }
  std::string key = pathOrName;
  std::replace(key.begin(), key.end(), '-', '_');
  for (const auto& [name, text] : embedded::kSpecs)
    if (name == key) return std::string(text);
  throw Error(ErrorCode::InvalidArgument, "no spec file or shipped spec named '" + pathOrName + "'");
}

std::vector<std::string> shippedSpecNames() {
  std::vector<std::string> out;
  for (const auto& [name, text] : embedded::kSpecs) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '_', '-');
    out.push_back(n);
  }
  return out;
}

std::vector<std::string> demoNames() { return {"qg-munk", "qg-stommel", "qg-disc", "ode1", "ode-munk"}; }

std::string demoEpsGrid(const std::string& demo) {
  // The Munk analogue needs eps small enough that the cutoff truncation,
  // exp(-T / (8 eps^(1/3))), sits well below eps^(1/3).
  if (demo == "ode-munk") return "1e-6:1e-12:7";
  return "1e-2:1e-5:7";
}

Report runDemo(const std::string& name) {
  auto names = demoNames();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorCode::InvalidArgument, "unknown demo '" + name + "'");
  dsl::OperatorSpec spec = dsl::parseSpec(loadSpecText(name));
  Report report = hypothesisReport(analyzeWithH5(spec), true);
  report.command = "demo " + name;
  if (spec.problem && spec.nvars == 0) {
    SpecExpansion exp = expandSpec(spec, 0);
    for (std::size_t k = 0; k < exp.modes.size(); ++k)
      report.expansions.push_back(expansionDoc(exp.modes[k], exp.composites[k]));
    report.validation = validationDoc(validateSpec(spec, 0, parseEpsGrid(demoEpsGrid(name))));
  }
  return report;
}

}  // namespace blexpand
