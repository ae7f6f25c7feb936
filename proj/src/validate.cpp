#include "blexpand/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "blexpand/error.hpp"
#include "blexpand/parallel.hpp"
#include "blexpand/reference.hpp"

namespace blexpand {

namespace {

ValidationRow validateAt(const Problem1D& problem, const CompositeExpansion& comp, double eps) {
  ValidationRow row;
  row.eps = eps;
  auto grid = validationGrid(comp, eps);
  ReferenceSolution ref = referenceSolve(problem, eps, grid);
  row.condition = ref.condition;
  const int m = problem.symbol.xinDegree();
  const Rational valuation = problem.symbol.minValuation();
  const double normalise = std::pow(eps, -valuation.get_d());
  std::vector<Complex> coef(m + 1, 0);
  for (const auto& [key, c] : problem.symbol.terms())
    coef[key.xdeg] += c.toComplex() * std::pow(eps, problem.symbol.epsExponent(key).get_d()) *
                      std::pow(Complex(0, -1), key.xdeg);
  const double fscale = std::pow(eps, problem.forcingEps.get_d());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid[k];
    row.supError = std::max(row.supError, std::abs(comp.evaluate(x, eps) - ref.values[k]));
    Complex lhs = 0;
    for (int d = 0; d <= m; ++d)
      if (coef[d] != Complex(0)) lhs += coef[d] * comp.evaluate(x, eps, d);
    Complex f = 0;
    for (std::size_t p = problem.forcing.size(); p-- > 0;) f = f * x + problem.forcing[p];
    row.interiorResidual = std::max(row.interiorResidual, std::abs(lhs - fscale * f) * normalise);
  }
  for (const Endpoint* e : {&problem.left, &problem.right}) {
    double gamma = 0;
    for (const auto& l : comp.layers)
      if (l.component == e->id) gamma = std::max(gamma, l.gamma.get_d());
    for (const auto& c : e->conditions) {
      double misfit = std::abs(comp.evaluate(e->x, eps, c.order) - c.value);
      row.bcResidual = std::max(row.bcResidual, misfit * std::pow(eps, gamma * c.order));
    }
  }
  return row;
}

}  // namespace

std::vector<double> parseEpsGrid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  double a = 0, b = 0;
  long n = 0;
  try {
    if (parts.size() != 3) throw std::invalid_argument("parts");
    std::size_t used = 0;
    a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("a");
    b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("b");
    n = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("n");
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "eps grid must look like a:b:n, got '" + text + "'");
  }
  if (!(a > 0) || !(b > 0) || n < 2 || n > 1000)
    throw Error(ErrorCode::InvalidArgument, "eps grid needs positive ends and 2..1000 points");
  std::vector<double> out;
  for (long k = 0; k < n; ++k) out.push_back(a * std::pow(b / a, double(k) / double(n - 1)));
  return out;
}

std::vector<double> validationGrid(const CompositeExpansion& comp, double eps) {
  std::vector<double> grid;
  const double len = comp.right - comp.left;
  for (int k = 0; k <= 1000; ++k) grid.push_back(comp.left + len * k / 1000.0);
  for (const auto& l : comp.layers) {
    const double width = std::pow(eps, l.gamma.get_d());
    for (int k = 0; k < 40; ++k) {
      double t = 1e-3 * std::pow(5e4, k / 39.0) * width;
      double x = l.left ? l.origin + t : l.origin - t;
      if (x > comp.left && x < comp.right) grid.push_back(x);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double fitOrder(const std::vector<double>& eps, const std::vector<double>& errors) {
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < eps.size(); ++k)
    if (errors[k] > 0 && std::isfinite(errors[k])) {
      lx.push_back(std::log(eps[k]));
      ly.push_back(std::log(errors[k]));
    }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= lx.size();
  my /= ly.size();
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  return sxx > 0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

ValidationResult validate(const Problem1D& problem, int K, const std::vector<double>& epsGrid) {
  return validateModes(problem.name, {ModeProblem{"exp", 0, 1, problem}}, K, epsGrid);
}

ValidationResult validateModes(const std::string& name, const std::vector<ModeProblem>& modes, int K,
                               const std::vector<double>& epsGrid) {
  if (epsGrid.size() < 4) throw Error(ErrorCode::InvalidArgument, "validation needs at least 4 eps values");
  ValidationResult out;
  out.problem = name;
  out.order = K;
  std::vector<CompositeExpansion> comps;
  for (const auto& m : modes) comps.push_back(solveHierarchy1D(m.problem, K));
  out.predictedOrder = double(K + 1) / comps.front().rhoDenominator;
  const std::size_t nm = modes.size();
  auto perTask = parallelMap<ValidationRow>(epsGrid.size() * nm, [&](std::size_t t) {
    return validateAt(modes[t % nm].problem, comps[t % nm], epsGrid[t / nm]);
  });
  std::vector<double> errors;
  for (std::size_t e = 0; e < epsGrid.size(); ++e) {
    ValidationRow row;
    row.eps = epsGrid[e];
    for (std::size_t m = 0; m < nm; ++m) {
      const ValidationRow& r = perTask[e * nm + m];
      row.supError += r.supError;
      row.interiorResidual += r.interiorResidual;
      row.bcResidual += r.bcResidual;
      row.condition = std::max(row.condition, r.condition);
    }
    out.rows.push_back(row);
    errors.push_back(row.supError);
  }
  out.exact = std::all_of(errors.begin(), errors.end(), [](double v) { return v == 0; });
  out.fittedOrder = out.exact ? std::numeric_limits<double>::quiet_NaN() : fitOrder(epsGrid, errors);
  return out;
}

}  // namespace blexpand
