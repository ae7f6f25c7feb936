#pragma once

#include <string>
#include <vector>

#include "blexpand/report.hpp"

namespace blexpand {

// Spec text by path, or by the name of a shipped spec ("qg-munk" and
// "qg_munk" both work). Throws InvalidArgument when neither resolves.
std::string loadSpecText(const std::string& pathOrName);
std::vector<std::string> shippedSpecNames();

std::vector<std::string> demoNames();

// Eps grid used by the demo validations.
std::string demoEpsGrid(const std::string& demo);

// Analysis with bases for every demo; expansion and validation as well for
// the one-dimensional ones.
Report runDemo(const std::string& name);

}  // namespace blexpand
