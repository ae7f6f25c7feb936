#include "blexpand/wkb.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <sstream>

#include "blexpand/error.hpp"
#include "blexpand/profile.hpp"

namespace blexpand {

namespace {

using CPoly = std::vector<Complex>;
const Complex kI(0, 1);

CPoly polyDerivative(const CPoly& p, int times = 1) {
  CPoly q = p;
  for (int t = 0; t < times; ++t) {
    if (q.size() <= 1) return {};
    CPoly d(q.size() - 1);
    for (std::size_t k = 1; k < q.size(); ++k) d[k - 1] = q[k] * double(k);
    q = d;
  }
  return q;
}

CPoly antiderivative(const CPoly& p) {
  CPoly q(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / double(k + 1);
  return q;
}

Complex polyValue(const CPoly& p, double x) {
  Complex s = 0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * x + p[k];
  return s;
}

void addInto(CPoly& a, const CPoly& b, Complex scale = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += scale * b[k];
}

// D^k with D = -i d/dx.
CPoly applyD(const CPoly& p, int k) {
  CPoly q = polyDerivative(p, k);
  Complex f = std::pow(-kI, k);
  for (auto& c : q) c *= f;
  return q;
}

// sum_k sym[k] D^k p
CPoly applySymbol(const CPoly& sym, const CPoly& p) {
  CPoly out;
  for (std::size_t k = 0; k < sym.size(); ++k)
    if (sym[k] != Complex(0)) addInto(out, applyD(p, static_cast<int>(k)), sym[k]);
  return out;
}

// Taylor coefficients of sym at eta: sym(eta + t) = sum c_t t^t.
CPoly taylorAt(const CPoly& sym, Complex eta) { return taylorShift(sym, eta); }

// sym(eta + D) q for the theta-polynomial q.
CPoly applyShifted(const CPoly& sym, Complex eta, const CPoly& q) { return applySymbol(taylorAt(sym, eta), q); }

// Solve sym(eta + D) q = r where eta is a root of multiplicity mu; the
// particular solution has no theta^p, p < mu, component.
CPoly solveShifted(const CPoly& sym, Complex eta, int mu, const CPoly& r) {
  CPoly c = taylorAt(sym, eta);
  if (static_cast<int>(c.size()) <= mu || std::abs(c[mu]) == 0)
    throw Error(ErrorCode::Internal, "layer symbol root multiplicity mismatch");
  // w = D^mu q satisfies sum_{t>=mu} c_t D^(t-mu) w = r; D is nilpotent.
  CPoly w(r.size());
  CPoly residual = r;
  for (std::size_t iter = 0; iter <= r.size() + 1; ++iter) {
    CPoly step = residual;
    for (auto& v : step) v /= c[mu];
    addInto(w, step);
    CPoly lhs;
    for (std::size_t t = mu; t < c.size(); ++t) addInto(lhs, applyD(w, static_cast<int>(t) - mu), c[t]);
    residual = r;
    addInto(residual, lhs, -1.0);
    double norm = 0;
    for (auto& v : residual) norm = std::max(norm, std::abs(v));
    if (norm == 0) break;
  }
  // q = D^-mu w, D^-1 = i * integral
  CPoly q = w;
  for (int t = 0; t < mu; ++t) {
    q = antiderivative(q);
    for (auto& v : q) v *= kI;
  }
  return q;
}

ExpPoly derivativeTheta(const ExpPoly& f) {
  ExpPoly out = f;
  for (auto& term : out) {
    CPoly d = polyDerivative(term.poly);
    CPoly g = term.poly;
    for (auto& v : g) v *= kI * term.root;
    addInto(g, d);
    term.poly = g;
  }
  return out;
}

// Coefficients of a (nvars = 0) grouped by rho order: result[s][d] is the
// coefficient of rho^s xin^d.
std::map<int, CPoly> rhoSeries(const SymbolPoly& a, long Q) {
  std::map<int, CPoly> out;
  for (const auto& [key, c] : a.terms()) {
    Rational e = a.epsExponent(key) * Q;
    if (!isInteger(e)) throw Error(ErrorCode::Internal, "rho denominator does not clear an eps exponent");
    CPoly& p = out[static_cast<int>(e.get_num().get_si())];
    if (static_cast<int>(p.size()) <= key.xdeg) p.resize(key.xdeg + 1);
    p[key.xdeg] += c.toComplex();
  }
  return out;
}

long exponentDenominators(const SymbolPoly& a) {
  long q = 1;
  for (const auto& [key, c] : a.terms()) q = lcmLong(q, a.epsExponent(key).get_den().get_si());
  return q;
}

struct LayerModel {
  int endpoint = 0;  // 0 left, 1 right
  Rational gamma;
  int classIndex = 0;
  int mPlus = 0;
  SymbolPoly rescaled{0};
  std::map<int, CPoly> series;
  std::vector<BasisRoot> roots;
};

// gamma * Q * order, an integer once Q clears gamma's denominator.
int scaledOffset(const Rational& gamma, long Q, int order) {
  Rational v = gamma * Q * order;
  return static_cast<int>(v.get_num().get_si());
}

struct Column {
  int layer = -1;  // -1: interior constant
  int index = 0;   // interior power, or root index
  int power = 0;   // theta power for layers
};

}  // namespace

std::string TraceBookkeeping::str() const {
  std::ostringstream os;
  int unknowns = interiorConstants;
  for (const auto& [id, n] : absorbed) unknowns += n;
  os << conditions << " conditions, " << unknowns << " unknowns per order (" << interiorConstants << " interior";
  for (const auto& [id, n] : absorbed) os << ", " << n << " in layers at " << id;
  os << ")";
  return os.str();
}

double cutoff(double d, double T, int derivative) {
  double t = (d - T / 4) / (T / 4);
  if (t <= 0) return derivative == 0 ? 1 : 0;
  if (t >= 1) return 0;
  double s;
  switch (derivative) {
    case 0: s = t * t * t * (10 - 15 * t + 6 * t * t); return 1 - s;
    case 1: s = 30 * t * t * (1 - t) * (1 - t); break;
    case 2: s = 60 * t * (1 - t) * (1 - 2 * t); break;
    case 3: s = 60 * (1 - 6 * t + 6 * t * t); break;
    case 4: s = 60 * (-6 + 12 * t); break;
    case 5: s = 720; break;
    default: return 0;
  }
  return -s * std::pow(4 / T, derivative);
}

Complex CompositeExpansion::evaluateInterior(double x, double eps, int derivative) const {
  const double rho = std::pow(eps, 1.0 / rhoDenominator);
  Complex s = 0, rn = 1;
  for (const auto& u : interior) {
    s += rn * polyValue(polyDerivative(u, derivative), x);
    rn *= rho;
  }
  return s;
}

Complex CompositeExpansion::evaluate(double x, double eps, int derivative) const {
  const double rho = std::pow(eps, 1.0 / rhoDenominator);
  Complex total = evaluateInterior(x, eps, derivative);
  for (const auto& layer : layers) {
    const double sign = layer.left ? 1 : -1;
    const double d = sign * (x - layer.origin);
    if (d >= cutoffT / 2) continue;
    const double scale = std::pow(eps, -layer.gamma.get_d());
    const double theta = d * scale;
    // v^(k)(theta) summed over orders
    std::vector<Complex> vk(derivative + 1, 0);
    Complex rn = 1;
    for (const auto& v : layer.orders) {
      ExpPoly f = v;
      for (int k = 0; k <= derivative; ++k) {
        vk[k] += rn * evalExpPoly(f, theta);
        if (k < derivative) f = derivativeTheta(f);
      }
      rn *= rho;
    }
    Complex s = 0;
    double binom = 1;
    for (int i = 0; i <= derivative; ++i) {
      const int k = derivative - i;
      s += binom * std::pow(sign, i) * cutoff(d, cutoffT, i) * std::pow(sign * scale, k) * vk[k];
      binom = binom * (derivative - i) / (i + 1);
    }
    total += s;
  }
  return total;
}

CompositeExpansion solveHierarchy1D(const Problem1D& problem, int K) {
  if (problem.symbol.nvars() != 0) throw Error(ErrorCode::InvalidArgument, "one-dimensional symbol expected");
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  const Endpoint* ends[2] = {&problem.left, &problem.right};
  if (!(problem.left.x < problem.right.x)) throw Error(ErrorCode::InvalidArgument, "empty interval");

  const Rational valuation = problem.symbol.minValuation();
  const SymbolPoly interiorSymbol = problem.symbol * SymbolPoly::epsPower(0, -valuation);
  const Rational forcingShift = problem.forcingEps - valuation;

  // layers at both ends
  std::vector<LayerModel> layers;
  for (int e = 0; e < 2; ++e) {
    SymbolPoly chart = e == 0 ? problem.symbol : problem.symbol.substitute({}, -SymbolPoly::xin(0));
    SingularProfile prof = profileAt(chart, {});
    auto ops = singularOperators(prof, ends[e]->id, {{}});
    for (std::size_t j = 0; j < ops.size(); ++j) {
      if (!isBoundaryLayerExponent(ops[j])) continue;
      LayerModel L;
      L.endpoint = e;
      L.gamma = ops[j].gamma;
      L.classIndex = static_cast<int>(j) + 1;
      L.mPlus = ops[j].mPlus;
      L.rescaled = chart.rescale(prof.classes[j].gamma, prof.classes[j].beta);
      L.roots = profileBasis(ops[j]).roots;
      layers.push_back(std::move(L));
    }
  }

  long Q = lcmLong(exponentDenominators(interiorSymbol), forcingShift.get_den().get_si());
  for (const auto& L : layers) Q = lcmLong(lcmLong(Q, L.gamma.get_den().get_si()), exponentDenominators(L.rescaled));
  for (auto& L : layers) L.series = rhoSeries(L.rescaled, Q);
  const auto interiorSeries = rhoSeries(interiorSymbol, Q);

  const CPoly& reduced = interiorSeries.at(0);
  int d = -1;
  Complex lead = 0;
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (reduced[k] == Complex(0)) continue;
    if (d >= 0) throw Error(ErrorCode::Unsupported, "reduced interior operator must be a single power of D");
    d = static_cast<int>(k);
    lead = reduced[k];
  }
  Rational nfR = forcingShift * Q;
  if (sgn(nfR) < 0) throw Error(ErrorCode::Unsupported, "forcing is larger than the reduced interior operator allows");
  const int nf = static_cast<int>(nfR.get_num().get_si());

  // unknown columns
  std::vector<Column> cols;
  for (int q = 0; q < d; ++q) cols.push_back({-1, q, 0});
  CompositeExpansion out;
  out.order = K;
  out.rhoDenominator = static_cast<int>(Q);
  out.left = problem.left.x;
  out.right = problem.right.x;
  out.cutoffT = out.right - out.left;
  out.bookkeeping.interiorConstants = d;
  for (int e = 0; e < 2; ++e) {
    int absorbed = 0;
    for (std::size_t l = 0; l < layers.size(); ++l) {
      if (layers[l].endpoint != e) continue;
      for (std::size_t r = 0; r < layers[l].roots.size(); ++r)
        for (int p = 0; p < layers[l].roots[r].multiplicity; ++p) {
          cols.push_back({static_cast<int>(l), static_cast<int>(r), p});
          ++absorbed;
        }
    }
    out.bookkeeping.absorbed.emplace_back(ends[e]->id, absorbed);
  }

  struct Row {
    int endpoint;
    int order;
    Complex value;
    int emin;
  };
  std::vector<Row> rows;
  for (int e = 0; e < 2; ++e)
    for (const auto& c : ends[e]->conditions) {
      int emin = 0;
      for (const auto& L : layers)
        if (L.endpoint == e) emin = std::min<int>(emin, -scaledOffset(L.gamma, Q, c.order));
      rows.push_back({e, c.order, c.value, emin});
    }
  out.bookkeeping.conditions = static_cast<int>(rows.size());
  const int N = static_cast<int>(cols.size());
  if (static_cast<int>(rows.size()) < N)
    throw Error(ErrorCode::UnderdeterminedHierarchy, out.bookkeeping.str());
  if (static_cast<int>(rows.size()) > N)
    throw Error(ErrorCode::OverdeterminedHierarchy, out.bookkeeping.str());

  auto layerOffset = [&](const Row& r, const LayerModel& L) {
    return -scaledOffset(L.gamma, Q, r.order) - r.emin;
  };
  auto layerTrace = [&](const ExpPoly& v, const Row& r, const LayerModel& L) {
    ExpPoly f = v;
    for (int k = 0; k < r.order; ++k) f = derivativeTheta(f);
    return std::pow(L.endpoint == 0 ? 1.0 : -1.0, r.order) * evalExpPoly(f, 0);
  };
  auto interiorTrace = [&](const CPoly& u, const Row& r) {
    return polyValue(polyDerivative(u, r.order), ends[r.endpoint]->x);
  };
  auto basisFunction = [&](const Column& c) {
    const BasisRoot& br = layers[c.layer].roots[c.index];
    CPoly poly(c.power + 1);
    poly[c.power] = 1;
    return ExpPoly{{br.root, poly}};
  };

  // leading trace matrix
  Eigen::MatrixXcd M0 = Eigen::MatrixXcd::Zero(N, N);
  for (int r = 0; r < N; ++r) {
    const Row& row = rows[r];
    for (int c = 0; c < N; ++c) {
      const Column& col = cols[c];
      if (col.layer < 0) {
        if (-row.emin != 0) continue;
        CPoly mono(col.index + 1);
        mono[col.index] = 1;
        M0(r, c) = interiorTrace(mono, row);
      } else {
        const LayerModel& L = layers[col.layer];
        if (L.endpoint != row.endpoint || layerOffset(row, L) != 0) continue;
        M0(r, c) = layerTrace(basisFunction(col), row, L);
      }
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(M0);
  lu.setThreshold(1e-10);
  if (N > 0 && !lu.isInvertible())
    throw Error(ErrorCode::SingularTraceSystem, "leading trace system is singular: " + out.bookkeeping.str());

  std::vector<CPoly> interiorFull;
  std::vector<std::vector<ExpPoly>> layerFull(layers.size());
  for (int n = 0; n <= K; ++n) {
    // interior particular solution
    CPoly rhs;
    if (n == nf) addInto(rhs, problem.forcing);
    for (const auto& [s, sym] : interiorSeries) {
      if (s == 0 || s > n) continue;
      addInto(rhs, applySymbol(sym, interiorFull[n - s]), -1.0);
    }
    CPoly w = rhs;
    for (auto& v : w) v /= lead * std::pow(-kI, d);
    for (int t = 0; t < d; ++t) w = antiderivative(w);
    // layer particular solutions
    std::vector<ExpPoly> layerPart(layers.size());
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const LayerModel& L = layers[l];
      for (std::size_t r = 0; r < L.roots.size(); ++r) {
        const Complex eta = L.roots[r].root;
        CPoly rr;
        for (const auto& [s, sym] : L.series) {
          if (s == 0 || s > n) continue;
          for (const auto& term : layerFull[l][n - s])
            if (term.root == eta) addInto(rr, applyShifted(sym, eta, term.poly), -1.0);
        }
        CPoly q = rr.empty() ? CPoly{} : solveShifted(L.series.at(0), eta, L.roots[r].multiplicity, rr);
        layerPart[l].push_back({eta, q});
      }
    }
    // trace system
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(N);
    for (int r = 0; r < N; ++r) {
      const Row& row = rows[r];
      Complex known = 0;
      int ni = n + row.emin;  // interior order entering at this scaled order
      if (ni >= 0) known += interiorTrace(ni == n ? w : interiorFull[ni], row);
      for (std::size_t l = 0; l < layers.size(); ++l) {
        const LayerModel& L = layers[l];
        if (L.endpoint != row.endpoint) continue;
        int nl = n - layerOffset(row, L);
        if (nl < 0) continue;
        known += layerTrace(nl == n ? layerPart[l] : layerFull[l][nl], row, L);
      }
      b(r) = (n == -row.emin ? row.value : Complex(0)) - known;
    }
    Eigen::VectorXcd X = N > 0 ? Eigen::VectorXcd(lu.solve(b)) : Eigen::VectorXcd();
    for (int c = 0; c < N; ++c) {
      const Column& col = cols[c];
      if (col.layer < 0) {
        if (static_cast<int>(w.size()) <= col.index) w.resize(col.index + 1);
        w[col.index] += X(c);
      } else {
        for (auto& term : layerPart[col.layer])
          if (term.root == layers[col.layer].roots[col.index].root) {
            if (static_cast<int>(term.poly.size()) <= col.power) term.poly.resize(col.power + 1);
            term.poly[col.power] += X(c);
          }
      }
    }
    interiorFull.push_back(w);
    for (std::size_t l = 0; l < layers.size(); ++l) layerFull[l].push_back(layerPart[l]);
  }

  out.interior = interiorFull;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    LayerTerm t;
    t.component = ends[layers[l].endpoint]->id;
    t.left = layers[l].endpoint == 0;
    t.origin = ends[layers[l].endpoint]->x;
    t.gamma = layers[l].gamma;
    t.classIndex = layers[l].classIndex;
    t.mPlus = layers[l].mPlus;
    t.orders = layerFull[l];
    out.layers.push_back(std::move(t));
  }
  return out;
}

}  // namespace blexpand
