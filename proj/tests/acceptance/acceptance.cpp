// One line per acceptance criterion: "PASS [n] ..." or "FAIL [n] ...".
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "blexpand/clustering.hpp"
#include "blexpand/demo.hpp"
#include "blexpand/error.hpp"
#include "blexpand/half_plane.hpp"
#include "blexpand/invariance.hpp"

using namespace blexpand;

namespace {

int failures = 0;

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void guarded(int n, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, name, false, std::string("exception: ") + e.what());
  }
}

const ComponentDoc* component(const Report& r, const std::string& id) {
  for (const auto& c : r.components)
    if (c.id == id) return &c;
  return nullptr;
}

bool allPass(const ComponentDoc& c, std::initializer_list<const CheckDoc*> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckDoc* h) { return h->status == "pass"; });
}

ComplexPoly fromRoots(const std::vector<Complex>& roots, Complex lead) {
  ComplexPoly p{lead};
  for (const auto& r : roots) {
    ComplexPoly next(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = next;
  }
  return p;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

void munk() {
  const std::string name = "QG Munk: gamma 1/3 x3, one regular root, H1-H3, m+ W/E = 2/1, < 5 s";
  auto t0 = std::chrono::steady_clock::now();
  Report r = runDemo("qg-munk");
  double t = seconds(t0);
  std::string why;
  const int wantPlus[] = {2, 1};
  const char* ids[] = {"west", "east"};
  for (int k = 0; k < 2; ++k) {
    const ComponentDoc* c = component(r, ids[k]);
    if (!c) {
      why += std::string(" missing ") + ids[k] + ";";
      continue;
    }
    if (!allPass(*c, {&c->h1, &c->h2, &c->h3})) why += std::string(" H1-H3 not all pass on ") + ids[k] + ";";
    for (const auto& s : c->samples) {
      bool ok = s.degree == 4 && s.regularCount == 1 && s.classes.size() == 1 && s.classes[0].gamma == "1/3" &&
                s.classes[0].multiplicity == 3;
      if (!ok) why += " sample " + s.parameter + " has " + s.pattern + ";";
    }
    if (c->exponents.size() != 1 || c->exponents[0].mPlus != wantPlus[k] || !c->exponents[0].isLayer ||
        c->exponents[0].gamma != "1/3")
      why += std::string(" layer exponent mismatch on ") + ids[k] + ";";
  }
  if (t >= 5) why += " runtime " + fmt(t) + " s;";
  report(1, name, why.empty(), why.empty() ? "14 samples agree, runtime " + fmt(t) + " s" : why);
}

void stommel() {
  const std::string name = "QG Stommel delta=1/4: {1/4 x1, 3/8 x2}, gamma2 m+=1 both sides, gamma1 split, flagged, < 5 s";
  auto t0 = std::chrono::steady_clock::now();
  Report r = runDemo("qg-stommel");
  double t = seconds(t0);
  std::string why, detail;
  int gamma1Total = 0;
  for (const char* id : {"west", "east"}) {
    const ComponentDoc* c = component(r, id);
    if (!c) {
      why += std::string(" missing ") + id + ";";
      continue;
    }
    for (const auto& s : c->samples) {
      bool ok = s.classes.size() == 2 && s.classes[0].gamma == "1/4" && s.classes[0].multiplicity == 1 &&
                s.classes[1].gamma == "3/8" && s.classes[1].multiplicity == 2;
      if (!ok) why += " sample " + s.parameter + " has " + s.pattern + ";";
      // m+ as the root count dictates: basis dimension from the operator's
      // own roots at this sample
      for (const auto& o : s.operators)
        if (!o.basis || o.basis->dimension != o.mPlus) why += " basis/root count mismatch at " + s.parameter + ";";
    }
    if (c->exponents.size() != 2) {
      why += std::string(" expected two classes on ") + id + ";";
      continue;
    }
    const auto& g1 = c->exponents[0];
    const auto& g2 = c->exponents[1];
    if (g2.gamma != "3/8" || g2.mPlus != 1 || !g2.isLayer) why += std::string(" gamma2 not a layer on ") + id + ";";
    if (g1.mPlus < 0 || g1.mPlus > 1) why += std::string(" gamma1 m+ out of {0,1} on ") + id + ";";
    gamma1Total += g1.mPlus;
    detail += std::string(id) + " gamma1 m+=" + std::to_string(g1.mPlus) + " ";
  }
  if (gamma1Total != 1) why += " gamma1 not split across W/E;";
  int disagreements = 0;
  for (const auto& c : r.claims) disagreements += c.agrees ? 0 : 1;
  if (disagreements == 0 || r.notes.empty()) why += " W/E claim inconsistency not flagged;";
  if (t >= 5) why += " runtime " + fmt(t) + " s;";
  report(2, name, why.empty(),
         why.empty() ? detail + "| " + std::to_string(disagreements) + " claims flagged, runtime " + fmt(t) + " s"
                     : why);
}

void disc() {
  const std::string name = "QG disc: H3 fails, turning point within 1e-4 of x1'=0, 1/3 x3 away and 1/4 x4 there, < 10 s";
  auto t0 = std::chrono::steady_clock::now();
  Report r = runDemo("qg-disc");
  double t = seconds(t0);
  std::string why;
  const ComponentDoc* c = r.components.empty() ? nullptr : &r.components.front();
  if (!c) {
    report(3, name, false, "no component");
    return;
  }
  if (c->h3.status != "fail") why += " H3 did not fail;";
  // chart x1' = x1 vanishes at the top of the circle
  const double target = M_PI / 2;
  double best = INFINITY;
  for (const auto& tp : c->turningPoints) best = std::min(best, std::abs(tp.parameter - target));
  if (!(best < 1e-4)) why += " nearest turning point " + fmt(best) + " from pi/2;";
  int degenerate = 0, regular = 0;
  for (const auto& s : c->samples) {
    bool atTop = std::abs(s.value - target) < 1e-12;
    bool quarter = s.classes.size() == 1 && s.classes[0].gamma == "1/4" && s.classes[0].multiplicity == 4;
    bool third = s.classes.size() == 1 && s.classes[0].gamma == "1/3" && s.classes[0].multiplicity == 3;
    if (atTop) {
      if (quarter) ++degenerate;
      else why += " pattern at pi/2 is " + s.pattern + ";";
    } else if (third) {
      ++regular;
    }
  }
  if (degenerate != 1) why += " degenerate sample not found;";
  if (regular == 0) why += " no regular samples;";
  if (r.exitCode != 1) why += " exit code " + std::to_string(r.exitCode) + ";";
  if (t >= 10) why += " runtime " + fmt(t) + " s;";
  report(3, name, why.empty(),
         why.empty() ? "turning point " + fmt(best) + " from pi/2, runtime " + fmt(t) + " s" : why);
}

void clustering() {
  const std::string name =
      "root clustering: exact cardinalities at every eps 1e-2..1e-8, disjoint annuli at the smallest eps";
  std::vector<double> grid;
  for (int k = 2; k <= 8; ++k) grid.push_back(std::pow(10.0, -k));
  std::string why, detail;
  int sweeps = 0;
  for (const char* specName : {"qg-munk", "qg-stommel"}) {
    dsl::OperatorSpec spec = dsl::parseSpec(loadSpecText(specName));
    double worstDelta = 0, finalDelta = 0, eps0 = 1;
    int preAsymptotic = 0;
    for (const auto& b : spec.boundaries) {
      for (const auto& s : dsl::boundarySamples(spec, b.id)) {
        SymbolPoly a = dsl::elaborateAtSample(spec, b.id, s);
        SingularProfile prof = profileAt(a, dsl::zetaSamples(spec));
        // annuli eps^(-gamma +- delta) stay disjoint while delta is below
        // half the smallest gap between exponents (0 for regular roots)
        double gap = INFINITY, previous = 0;
        for (const auto& c : prof.classes) {
          gap = std::min(gap, c.gamma.get_d() - previous);
          previous = c.gamma.get_d();
        }
        for (double zeta : {1.0, -2.0}) {
          ++sweeps;
          ClusterSweep sweep;
          try {
            sweep = clusterSweep(a, prof, {Complex(zeta)}, grid);
          } catch (const Error& e) {
            why += std::string(" ") + specName + " " + b.id + ": " + e.what() + ";";
            continue;
          }
          eps0 = std::min(eps0, sweep.eps0);
          for (const auto& res : sweep.results) {
            for (const auto& cl : res.clusters)
              if (static_cast<int>(cl.roots.size()) != cl.expected)
                why += std::string(" ") + specName + " cardinality at eps " + fmt(res.eps) + ";";
            preAsymptotic += res.consistent ? 0 : 1;
            worstDelta = std::max(worstDelta, res.fittedDelta);
          }
          const ClusterResult& last = sweep.results.back();
          finalDelta = std::max(finalDelta, last.fittedDelta);
          if (!(last.fittedDelta < gap / 2))
            why += std::string(" ") + specName + " " + b.id + " delta " + fmt(last.fittedDelta) +
                   " at eps 1e-8 overlaps the next annulus;";
        }
      }
    }
    detail += std::string(specName) + ": delta " + fmt(finalDelta) + " at 1e-8 (max " + fmt(worstDelta) +
              " over the grid), magnitude ranking matches prediction below eps0 " + fmt(eps0) + " (" +
              std::to_string(preAsymptotic) + " pre-asymptotic sweep points); ";
  }
  report(4, name, why.empty(), std::to_string(sweeps) + " sweeps; " + detail + why);
}

void invariance() {
  const std::string name = "affine invariance: 50 random (symbol, map) trials, identical patterns";
  std::mt19937 rng(20241015);
  int fails = 0;
  std::string first;
  for (int trial = 0; trial < 50; ++trial) {
    int nvars = 1 + static_cast<int>(rng() % 2);
    SymbolPoly a = randomLayeredSymbol(rng, nvars);
    AffineChartMap map = randomChartMap(rng, nvars);
    InvarianceResult res = affineInvarianceCheck(a, map);
    if (!res.pass) {
      ++fails;
      if (first.empty()) first = res.before.str() + " vs " + res.after.str();
    }
  }
  report(5, name, fails == 0, std::to_string(fails) + " failures" + (first.empty() ? "" : ": " + first));
}

void halfPlane() {
  const std::string name = "half-plane counts: argument principle = eigenvalues on 200 random degree <= 8";
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3), logIm(std::log(1e-6), std::log(3.0));
  int mismatches = 0;
  std::string first;
  for (int trial = 0; trial < 200; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<Complex> roots;
    int truth = 0;
    for (int k = 0; k < deg; ++k) {
      double im = std::exp(logIm(rng)) * (rng() % 2 ? 1 : -1);
      roots.emplace_back(u(rng), im);
      truth += im > 0;
    }
    ComplexPoly p = fromRoots(roots, Complex(u(rng), 1 + std::abs(u(rng))));
    int eig = 0;
    for (const auto& z : polyRoots(p)) eig += z.imag() > 0;
    double wind = upperSemicircleWinding(p, 2 * rootModulusBound(p) + 1);
    int arg = static_cast<int>(std::lround(wind));
    if (arg != eig || std::abs(wind - arg) > 1e-6) {
      ++mismatches;
      if (first.empty())
        first = "trial " + std::to_string(trial) + ": winding " + fmt(wind) + " eigen " + std::to_string(eig);
    }
    if (eig != truth && first.empty()) first = "(eigen count differs from construction at trial " + std::to_string(trial) + ")";
  }
  report(6, name, mismatches == 0, std::to_string(mismatches) + " disagreements" + (first.empty() ? "" : "; " + first));
}

void residues() {
  const std::string name = "residue basis: omega0(eta^2+1) = pi e^-theta to 1e-10, quadrature = residues to 1e-10";
  std::string why;
  ProfileBasis b = profileBasis(std::vector<CRat>{CRat(1), CRat(0), CRat(1)});
  double worst = 0;
  for (double theta : {0.0, 1.0, 5.0}) {
    double err = std::abs(evalExpPoly(b.omega.at(0), theta) - M_PI * std::exp(-theta));
    worst = std::max(worst, err);
  }
  if (!(worst < 1e-10)) why += " omega0 error " + fmt(worst) + ";";
  double worstCross = 0;
  int operators = 0;
  for (const auto& specName : shippedSpecNames()) {
    dsl::OperatorSpec spec = dsl::parseSpec(loadSpecText(specName));
    Report r = hypothesisReport(analyzeSpec(spec), true);
    for (const auto& c : r.components)
      for (const auto& s : c.samples)
        for (const auto& o : s.operators) {
          if (!o.isLayer) continue;
          ++operators;
          if (!o.basis) {
            why += " " + specName + " " + c.id + " " + s.parameter + ": " + o.basisError + ";";
            continue;
          }
          worstCross = std::max(worstCross, o.basis->crossCheckError);
        }
  }
  if (!(worstCross < 1e-10)) why += " quadrature mismatch " + fmt(worstCross) + ";";
  report(7, name, why.empty(),
         "omega0 error " + fmt(worst) + ", " + std::to_string(operators) + " layer operators, max quadrature gap " +
             fmt(worstCross) + why);
}

void convergence() {
  const std::string name = "composite convergence: ode1 K=0 order 1.00+-0.15, Munk analogue K=0 order 0.33+-0.08, < 30 s each";
  struct Case {
    const char* spec;
    double target, tol;
  };
  std::string detail;
  bool ok = true;
  for (const Case& c : {Case{"ode1", 1.0, 0.15}, Case{"ode-munk", 1.0 / 3.0, 0.08}}) {
    auto t0 = std::chrono::steady_clock::now();
    dsl::OperatorSpec spec = dsl::parseSpec(loadSpecText(c.spec));
    std::string grid = demoEpsGrid(c.spec);
    ValidationResult v = validateSpec(spec, 0, parseEpsGrid(grid));
    double t = seconds(t0);
    bool pass = v.rows.size() >= 5 && std::isfinite(v.fittedOrder) && std::abs(v.fittedOrder - c.target) <= c.tol &&
                t < 30;
    ok = ok && pass;
    detail += std::string(c.spec) + " on " + grid + ": fitted " + (v.exact ? "exact" : fmt(v.fittedOrder)) +
              " (errors " + fmt(v.rows.front().supError) + " .. " + fmt(v.rows.back().supError) + "), " + fmt(t) +
              " s" + (pass ? "" : " [out of tolerance]") + "; ";
  }
  report(8, name, ok, detail);
}

void determinism() {
  const std::string name = "determinism: two runs of every demo give byte-identical JSON";
  std::string why;
  for (const auto& d : demoNames())
    if (emitJson(runDemo(d)) != emitJson(runDemo(d))) why += " " + d;
  report(9, name, why.empty(), why.empty() ? std::to_string(demoNames().size()) + " demos identical" : "differs:" + why);
}

}  // namespace

int main() {
  guarded(1, "QG Munk", munk);
  guarded(2, "QG Stommel", stommel);
  guarded(3, "QG disc", disc);
  guarded(4, "root clustering", clustering);
  guarded(5, "affine invariance", invariance);
  guarded(6, "half-plane counts", halfPlane);
  guarded(7, "residue basis", residues);
  guarded(8, "composite convergence", convergence);
  guarded(9, "determinism", determinism);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
