#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "blexpand/clustering.hpp"
#include "blexpand/error.hpp"
#include "blexpand/half_plane.hpp"
#include "qg_symbols.hpp"

using namespace blexpand;

namespace {

ComplexPoly fromRoots(const std::vector<Complex>& roots, Complex lead = 1) {
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

double matchError(std::vector<Complex> a, std::vector<Complex> b) {
  // Greedy nearest matching; fine for well separated roots.
  double worst = 0;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) { return std::abs(u - x) < std::abs(v - x); });
    worst = std::max(worst, std::abs(*it - x) / std::max(1.0, std::abs(x)));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST(PolyRoots, WilkinsonTwentyResiduals) {
  std::vector<Complex> r;
  for (int k = 1; k <= 20; ++k) r.push_back(k);
  ComplexPoly p = fromRoots(r);
  auto roots = polyRoots(p);
  ASSERT_EQ(roots.size(), 20u);
  for (const auto& z : roots) EXPECT_LT(relativeResidual(p, z), 1e-9);
}

TEST(PolyRoots, ExactZeroRootsAndScales) {
  auto roots = polyRoots({0, 0, Complex(0, 1e8), 1, 1});
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  EXPECT_EQ(roots[0], Complex(0));
  EXPECT_EQ(roots[1], Complex(0));
  EXPECT_THROW(polyRoots({3}), Error);
  EXPECT_THROW(polyRoots({3, 0, 0}), Error);
}

TEST(PolyRoots, WideDynamicRange) {
  // One tiny root next to three large ones, as in the Munk symbol at small eps.
  std::vector<Complex> r{Complex(1e-8, 2e-9), Complex(400, 30), Complex(-350, 200), Complex(-20, -460)};
  auto roots = polyRoots(fromRoots(r));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  EXPECT_LT(std::abs(roots[0] - r[0]) / std::abs(r[0]), 1e-6);
  EXPECT_LT(matchError(r, roots), 1e-10);
}

TEST(HalfPlane, CountsAgainstConstructedRoots) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<Complex> r;
    int upper = 0;
    for (int k = 0; k < deg; ++k) {
      double im = u(rng);
      if (std::abs(im) < 1e-3) im = 1e-3;
      r.emplace_back(u(rng), im);
      upper += im > 0;
    }
    auto count = upperHalfCount(fromRoots(r, Complex(u(rng), 1)));
    EXPECT_EQ(count.mPlus, upper);
    EXPECT_EQ(count.argumentCount, upper);
  }
}

TEST(HalfPlane, NearAxisRootsStillCounted) {
  std::vector<Complex> r{Complex(0.3, 1e-6), Complex(0.31, 1e-6), Complex(-2, -1e-6), Complex(5, 2)};
  ComplexPoly p = fromRoots(r);
  EXPECT_NEAR(upperSemicircleWinding(p, 20), 3.0, 1e-9);
  EXPECT_EQ(upperHalfCount(p).mPlus, 3);
}

TEST(HalfPlane, RealAxisRootRejected) {
  try {
    upperHalfCount(fromRoots({Complex(1, 0), Complex(0, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RealAxisRoot);
  }
}

TEST(HalfPlane, MunkLayerSymbols) {
  // i - xin^3 (west) and -i - xin^3 (east)
  EXPECT_EQ(upperHalfCount({Complex(0, 1), 0, 0, -1}).mPlus, 2);
  EXPECT_EQ(upperHalfCount({Complex(0, -1), 0, 0, -1}).mPlus, 1);
  EXPECT_EQ(upperHalfCount({1, 0, 1}).mPlus, 1);
}

namespace {

std::vector<double> epsGrid() { return {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8}; }

// Cardinalities hold at every eps; the asymptotic assignment is required
// from eps0 down.
void expectClustered(const SymbolPoly& a, double eps0) {
  auto prof = profileAt(a, defaultZetaSamples(1));
  for (double zeta : {2.0, -3.0}) {
    auto sweep = clusterSweep(a, prof, {Complex(zeta)}, epsGrid());
    for (const auto& res : sweep.results) {
      if (res.eps <= eps0) EXPECT_TRUE(res.consistent) << "eps " << res.eps << ": " << res.evidence;
      for (const auto& c : res.clusters) EXPECT_EQ(static_cast<int>(c.roots.size()), c.expected);
    }
    EXPECT_LE(sweep.results.back().fittedDelta, 0.1);
    EXPECT_GE(sweep.eps0, eps0);
  }
}

}  // namespace

TEST(Clustering, MunkRootsFollowExponents) {
  expectClustered(qgtest::munk(true, makeRational(1, 2)), 1e-2);
  expectClustered(qgtest::munk(false, makeRational(1, 2)), 1e-2);
}

TEST(Clustering, StommelRootsFollowExponents) {
  // eps^-1/4 and eps^-3/8 differ by less than a factor 2 at eps = 1e-2.
  expectClustered(qgtest::stommel(true, makeRational(1, 2), makeRational(1, 4)), 1e-3);
  expectClustered(qgtest::stommel(false, makeRational(1, 2), makeRational(1, 4)), 1e-3);
}
