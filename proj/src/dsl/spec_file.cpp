#include "blexpand/dsl/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "blexpand/dsl/parser.hpp"
#include "blexpand/profile.hpp"

namespace blexpand::dsl {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

bool isWord(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

struct Line {
  std::string key;
  std::string value;
  SourceSpan keySpan;
  SourceSpan valueSpan;
};

const char* curveName(CurveKind c) {
  switch (c) {
    case CurveKind::Point: return "point";
    case CurveKind::Graph: return "graph";
    case CurveKind::Circle: return "circle";
    case CurveKind::Flat: return "flat";
  }
  return "flat";
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  OperatorSpec run() {
    std::istringstream in{std::string(text_)};
    std::string raw;
    int lineNo = 0;
    while (std::getline(in, raw)) {
      ++lineNo;
      std::string body = raw.substr(0, raw.find('#'));
      std::string t = trim(body);
      if (t.empty()) continue;
      int indent = static_cast<int>(body.find_first_not_of(" \t")) + 1;
      if (t.front() == '[') {
        if (t.back() != ']') throw ParseError(ErrorCode::Parse, {lineNo, indent}, "unterminated section header");
        openSection(trim(t.substr(1, t.size() - 2)), {lineNo, indent});
        continue;
      }
      auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError(ErrorCode::Parse, {lineNo, indent}, "expected 'key = value'");
      Line l;
      l.key = trim(body.substr(0, eq));
      l.keySpan = {lineNo, indent};
      std::size_t vstart = body.find_first_not_of(" \t", eq + 1);
      if (vstart == std::string::npos) throw ParseError(ErrorCode::Parse, {lineNo, static_cast<int>(eq) + 2}, "missing value");
      l.value = trim(body.substr(vstart));
      l.valueSpan = {lineNo, static_cast<int>(vstart) + 1};
      if (section_.empty()) throw ParseError(ErrorCode::Parse, l.keySpan, "key outside of any section");
      handle(l);
    }
    if (!seenOperator_) throw ParseError(ErrorCode::Parse, {1, 1}, "missing [operator] section");
    for (const char* key : {"order", "nvars", "expr"})
      if (!seenKeys_.count("operator/" + std::string(key)))
        throw ParseError(ErrorCode::Parse, operatorSpan_, std::string("[operator] needs '") + key + "'");
    for (const auto& b : spec_.boundaries) checkBoundary(b);
    for (const auto& bc : spec_.bcs) {
      bool found = false;
      for (const auto& b : spec_.boundaries) found |= b.id == bc.component;
      if (!found) throw ParseError(ErrorCode::Parse, {1, 1}, "[bc." + bc.component + "] has no matching boundary");
    }
    return spec_;
  }

 private:
  void openSection(const std::string& name, SourceSpan span) {
    std::string head = name, id;
    auto dot = name.find('.');
    if (dot != std::string::npos) {
      head = name.substr(0, dot);
      id = name.substr(dot + 1);
      if (!isWord(id)) throw ParseError(ErrorCode::Parse, span, "bad section id '" + id + "'");
    }
    bool needsId = head == "boundary" || head == "bc";
    bool known = needsId || head == "operator" || head == "params" || head == "zeta" || head == "problem" ||
                 head == "claims";
    if (!known) throw ParseError(ErrorCode::Parse, span, "unknown section '" + name + "'");
    if (needsId == id.empty()) throw ParseError(ErrorCode::Parse, span, "section '" + name + "' malformed");
    if (!openedSections_.insert(name).second) throw ParseError(ErrorCode::Parse, span, "duplicate section '" + name + "'");
    section_ = head;
    sectionId_ = id;
    sectionKey_ = name;
    if (head == "operator") {
      seenOperator_ = true;
      operatorSpan_ = span;
    }
    if (head == "boundary") {
      BoundarySpec b;
      b.id = id;
      b.span = span;
      spec_.boundaries.push_back(b);
    }
    if (head == "bc") spec_.bcs.push_back({id, {}});
    if (head == "problem") spec_.problem = ProblemSpec{};
  }

  void once(const Line& l) {
    if (l.key == "mode") return;
    if (!seenKeys_.insert(sectionKey_ + "/" + l.key).second)
      throw ParseError(ErrorCode::Parse, l.keySpan, "duplicate key '" + l.key + "'");
  }

  ExprPtr expr(const Line& l) { return parseExpression(l.value, l.valueSpan); }

  std::string word(const Line& l, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
      if (l.value == a) return l.value;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw ParseError(ErrorCode::Parse, l.valueSpan, "'" + l.key + "' must be one of: " + list);
  }

  int integer(const Line& l) {
    try {
      Rational v = parseRational(l.value);
      if (isInteger(v) && v >= 0 && v < 64) return static_cast<int>(v.get_num().get_si());
    } catch (const Error&) {
    }
    throw ParseError(ErrorCode::Parse, l.valueSpan, "'" + l.key + "' must be a small nonnegative integer");
  }

  [[noreturn]] void unknownKey(const Line& l) {
    throw ParseError(ErrorCode::Parse, l.keySpan, "unknown key '" + l.key + "' in [" + sectionKey_ + "]");
  }

  void handle(const Line& l) {
    once(l);
    if (section_ == "operator") {
      if (l.key == "name") {
        if (!isWord(l.value)) throw ParseError(ErrorCode::Parse, l.valueSpan, "name must be a single word");
        spec_.name = l.value;
      } else if (l.key == "title") {
        spec_.title = l.value;
      } else if (l.key == "order") {
        spec_.order = integer(l);
      } else if (l.key == "nvars") {
        spec_.nvars = integer(l);
      } else if (l.key == "expr") {
        spec_.expr = expr(l);
      } else {
        unknownKey(l);
      }
    } else if (section_ == "params") {
      if (!isWord(l.key) || !std::isalpha(static_cast<unsigned char>(l.key[0])))
        throw ParseError(ErrorCode::Parse, l.keySpan, "bad parameter name '" + l.key + "'");
      spec_.params.emplace_back(l.key, expr(l));
    } else if (section_ == "boundary") {
      BoundarySpec& b = spec_.boundaries.back();
      if (l.key == "curve") {
        std::string c = word(l, {"point", "graph", "circle", "flat"});
        b.curve = c == "point" ? CurveKind::Point : c == "graph" ? CurveKind::Graph
                                                : c == "circle" ? CurveKind::Circle
                                                                 : CurveKind::Flat;
      } else if (l.key == "side") {
        b.side = word(l, {"left", "right", "west", "east", "inner"});
      } else if (l.key == "at") {
        b.at = expr(l);
      } else if (l.key == "chi") {
        b.chi = expr(l);
      } else if (l.key == "dchi") {
        b.dchi = expr(l);
      } else if (l.key == "radius") {
        b.radius = expr(l);
      } else if (l.key == "samples") {
        b.samples = parseExpressionList(l.value, l.valueSpan);
      } else if (l.key.rfind("xi", 0) == 0 && l.key.size() > 2 &&
                 std::all_of(l.key.begin() + 2, l.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        b.chart.emplace_back(l.key, expr(l));
      } else {
        unknownKey(l);
      }
    } else if (section_ == "zeta") {
      if (l.key != "samples") unknownKey(l);
      spec_.zetaSamples = parseExpressionList(l.value, l.valueSpan);
    } else if (section_ == "problem") {
      ProblemSpec& p = *spec_.problem;
      if (l.key == "kind") {
        p.kind = word(l, {"bvp1d", "qg-strip"});
      } else if (l.key == "forcing") {
        p.forcing = expr(l);
      } else if (l.key == "forcing_eps") {
        p.forcingEps = expr(l);
      } else if (l.key == "mode") {
        auto comma = l.value.find(',');
        std::string kind = trim(l.value.substr(0, comma));
        if (kind != "sin" && kind != "cos" && kind != "exp")
          throw ParseError(ErrorCode::Parse, l.valueSpan, "mode kind must be sin, cos or exp");
        if (comma == std::string::npos)
          throw ParseError(ErrorCode::Parse, l.valueSpan, "mode needs 'kind, wavenumber, amplitude'");
        auto rest = parseExpressionList(std::string_view(l.value).substr(comma + 1),
                                        {l.valueSpan.line, l.valueSpan.column + static_cast<int>(comma) + 1});
        if (rest.size() != 2) throw ParseError(ErrorCode::Parse, l.valueSpan, "mode needs 'kind, wavenumber, amplitude'");
        p.modes.push_back({kind, rest[0], rest[1]});
      } else {
        unknownKey(l);
      }
    } else if (section_ == "bc") {
      if (l.key.size() < 2 || l.key[0] != 'd' ||
          !std::all_of(l.key.begin() + 1, l.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(ErrorCode::Parse, l.keySpan, "boundary condition keys are d0, d1, ... (derivative order)");
      spec_.bcs.back().conditions.push_back({std::stoi(l.key.substr(1)), expr(l)});
    } else if (section_ == "claims") {
      // layer.<component>.<class> = yes|no
      std::string rest = l.key.rfind("layer.", 0) == 0 ? l.key.substr(6) : "";
      auto dot = rest.rfind('.');
      if (dot == std::string::npos || dot == 0) throw ParseError(ErrorCode::Parse, l.keySpan, "claims use 'layer.<component>.<class> = yes|no'");
      LayerClaim c;
      c.component = rest.substr(0, dot);
      try {
        c.classIndex = std::stoi(rest.substr(dot + 1));
      } catch (const std::exception&) {
        throw ParseError(ErrorCode::Parse, l.keySpan, "class index must be an integer");
      }
      c.isLayer = word(l, {"yes", "no"}) == "yes";
      spec_.claims.push_back(c);
    }
  }

  void checkBoundary(const BoundarySpec& b) {
    auto need = [&](const ExprPtr& e, const char* key) {
      if (!e) throw ParseError(ErrorCode::Parse, b.span, "[boundary." + b.id + "] needs '" + key + "'");
    };
    switch (b.curve) {
      case CurveKind::Point:
        need(b.at, "at");
        if (b.side != "left" && b.side != "right")
          throw ParseError(ErrorCode::Parse, b.span, "point boundary side must be left or right");
        break;
      case CurveKind::Graph:
        need(b.chi, "chi");
        need(b.dchi, "dchi");
        if (b.side != "west" && b.side != "east")
          throw ParseError(ErrorCode::Parse, b.span, "graph boundary side must be west or east");
        break;
      case CurveKind::Circle:
      case CurveKind::Flat:
        break;
    }
    if (b.curve != CurveKind::Point && b.samples.size() < 3)
      throw ParseError(ErrorCode::Parse, b.span, "[boundary." + b.id + "] needs at least 3 samples");
  }

  std::string_view text_;
  OperatorSpec spec_;
  std::string section_, sectionId_, sectionKey_;
  std::set<std::string> openedSections_, seenKeys_;
  bool seenOperator_ = false;
  SourceSpan operatorSpan_{1, 1};
};

std::string list(const std::vector<ExprPtr>& items) {
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? ", " : "") + printExpr(*items[k]);
  return s;
}

bool equalPtr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurallyEqual(*a, *b);
}

bool equalList(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!equalPtr(a[k], b[k])) return false;
  return true;
}

Environment paramEnvironment(const OperatorSpec& spec) {
  Environment env;
  env.nvars = 0;
  env.allowEps = false;
  env.scalars = evaluateParams(spec);
  return env;
}

}  // namespace

const BoundarySpec& OperatorSpec::boundary(const std::string& id) const {
  for (const auto& b : boundaries)
    if (b.id == id) return b;
  throw Error(ErrorCode::InvalidArgument, "no boundary component '" + id + "'");
}

OperatorSpec parseSpec(std::string_view text) { return SpecParser(text).run(); }

std::string printSpec(const OperatorSpec& spec) {
  std::ostringstream os;
  os << "[operator]\n";
  if (!spec.name.empty()) os << "name = " << spec.name << "\n";
  if (!spec.title.empty()) os << "title = " << spec.title << "\n";
  os << "order = " << spec.order << "\nnvars = " << spec.nvars << "\n";
  if (spec.expr) os << "expr = " << printExpr(*spec.expr) << "\n";
  if (!spec.params.empty()) {
    os << "\n[params]\n";
    for (const auto& [k, v] : spec.params) os << k << " = " << printExpr(*v) << "\n";
  }
  for (const auto& b : spec.boundaries) {
    os << "\n[boundary." << b.id << "]\ncurve = " << curveName(b.curve) << "\n";
    if (!b.side.empty()) os << "side = " << b.side << "\n";
    if (b.at) os << "at = " << printExpr(*b.at) << "\n";
    if (b.chi) os << "chi = " << printExpr(*b.chi) << "\n";
    if (b.dchi) os << "dchi = " << printExpr(*b.dchi) << "\n";
    if (b.radius) os << "radius = " << printExpr(*b.radius) << "\n";
    for (const auto& [k, v] : b.chart) os << k << " = " << printExpr(*v) << "\n";
    if (!b.samples.empty()) os << "samples = " << list(b.samples) << "\n";
  }
  if (!spec.zetaSamples.empty()) os << "\n[zeta]\nsamples = " << list(spec.zetaSamples) << "\n";
  if (spec.problem) {
    const auto& p = *spec.problem;
    os << "\n[problem]\n";
    if (!p.kind.empty()) os << "kind = " << p.kind << "\n";
    if (p.forcing) os << "forcing = " << printExpr(*p.forcing) << "\n";
    if (p.forcingEps) os << "forcing_eps = " << printExpr(*p.forcingEps) << "\n";
    for (const auto& m : p.modes)
      os << "mode = " << m.kind << ", " << printExpr(*m.wavenumber) << ", " << printExpr(*m.amplitude) << "\n";
  }
  for (const auto& bc : spec.bcs) {
    os << "\n[bc." << bc.component << "]\n";
    for (const auto& c : bc.conditions) os << "d" << c.order << " = " << printExpr(*c.value) << "\n";
  }
  if (!spec.claims.empty()) {
    os << "\n[claims]\n";
    for (const auto& c : spec.claims)
      os << "layer." << c.component << "." << c.classIndex << " = " << (c.isLayer ? "yes" : "no") << "\n";
  }
  return os.str();
}

bool structurallyEqual(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.name != b.name || a.title != b.title || a.order != b.order || a.nvars != b.nvars) return false;
  if (!equalPtr(a.expr, b.expr) || a.params.size() != b.params.size()) return false;
  for (std::size_t k = 0; k < a.params.size(); ++k)
    if (a.params[k].first != b.params[k].first || !equalPtr(a.params[k].second, b.params[k].second)) return false;
  if (a.boundaries.size() != b.boundaries.size()) return false;
  for (std::size_t k = 0; k < a.boundaries.size(); ++k) {
    const auto &x = a.boundaries[k], &y = b.boundaries[k];
    if (x.id != y.id || x.curve != y.curve || x.side != y.side || !equalPtr(x.at, y.at) || !equalPtr(x.chi, y.chi) ||
        !equalPtr(x.dchi, y.dchi) || !equalPtr(x.radius, y.radius) || !equalList(x.samples, y.samples) ||
        x.chart.size() != y.chart.size())
      return false;
    for (std::size_t j = 0; j < x.chart.size(); ++j)
      if (x.chart[j].first != y.chart[j].first || !equalPtr(x.chart[j].second, y.chart[j].second)) return false;
  }
  if (!equalList(a.zetaSamples, b.zetaSamples) || a.problem.has_value() != b.problem.has_value()) return false;
  if (a.problem) {
    const auto &p = *a.problem, &q = *b.problem;
    if (p.kind != q.kind || !equalPtr(p.forcing, q.forcing) || !equalPtr(p.forcingEps, q.forcingEps) ||
        p.modes.size() != q.modes.size())
      return false;
    for (std::size_t k = 0; k < p.modes.size(); ++k)
      if (p.modes[k].kind != q.modes[k].kind || !equalPtr(p.modes[k].wavenumber, q.modes[k].wavenumber) ||
          !equalPtr(p.modes[k].amplitude, q.modes[k].amplitude))
        return false;
  }
  if (a.bcs.size() != b.bcs.size() || a.claims.size() != b.claims.size()) return false;
  for (std::size_t k = 0; k < a.bcs.size(); ++k) {
    if (a.bcs[k].component != b.bcs[k].component || a.bcs[k].conditions.size() != b.bcs[k].conditions.size())
      return false;
    for (std::size_t j = 0; j < a.bcs[k].conditions.size(); ++j)
      if (a.bcs[k].conditions[j].order != b.bcs[k].conditions[j].order ||
          !equalPtr(a.bcs[k].conditions[j].value, b.bcs[k].conditions[j].value))
        return false;
  }
  for (std::size_t k = 0; k < a.claims.size(); ++k)
    if (a.claims[k].component != b.claims[k].component || a.claims[k].classIndex != b.claims[k].classIndex ||
        a.claims[k].isLayer != b.claims[k].isLayer)
      return false;
  return true;
}

std::map<std::string, Scalar> evaluateParams(const OperatorSpec& spec) {
  Environment env;
  env.allowEps = false;
  for (const auto& [name, e] : spec.params) {
    if (name == "eps" || name == "i" || name == "pi" || name == "xin" || name.rfind("xi", 0) == 0 ||
        name.rfind("zeta", 0) == 0)
      throw ParseError(ErrorCode::Parse, e->span, "parameter name '" + name + "' is reserved");
    env.scalars[name] = evaluateScalar(*e, env);
  }
  return env.scalars;
}

std::vector<Scalar> boundarySamples(const OperatorSpec& spec, const std::string& component) {
  const BoundarySpec& b = spec.boundary(component);
  Environment env = paramEnvironment(spec);
  if (b.curve == CurveKind::Point) return {b.at ? evaluateScalar(*b.at, env) : Scalar::exact(0)};
  std::vector<Scalar> out;
  for (const auto& e : b.samples) out.push_back(evaluateScalar(*e, env));
  return out;
}

SymbolPoly elaborateWithImages(const OperatorSpec& spec, const std::vector<SymbolPoly>& xiImages,
                               const std::map<std::string, Scalar>& extraScalars) {
  if (!spec.expr) throw Error(ErrorCode::Structural, "spec has no operator expression");
  if (static_cast<int>(xiImages.size()) != spec.nvars + 1)
    throw Error(ErrorCode::Structural, "need one image per spatial frequency variable");
  Environment env;
  env.nvars = xiImages[0].nvars();
  env.scalars = evaluateParams(spec);
  for (const auto& [k, v] : extraScalars) env.scalars[k] = v;
  for (std::size_t k = 0; k < xiImages.size(); ++k) env.symbols["xi" + std::to_string(k + 1)] = xiImages[k];
  env.symbols["xin"] = SymbolPoly::xin(env.nvars);
  for (int k = 0; k < env.nvars; ++k) env.symbols["zeta" + std::to_string(k + 1)] = SymbolPoly::zeta(env.nvars, k);
  return evaluateSymbol(*spec.expr, env);
}

SymbolPoly elaborateAtSample(const OperatorSpec& spec, const std::string& component, const Scalar& s) {
  const BoundarySpec& b = spec.boundary(component);
  const int nv = spec.nvars;
  Environment env = paramEnvironment(spec);
  env.nvars = nv;
  SymbolPoly xin = SymbolPoly::xin(nv);
  auto cst = [&](const Scalar& v) { return SymbolPoly::constant(nv, CRat(v.toRational())); };
  std::map<std::string, Scalar> vars{{"s", s}};
  std::vector<SymbolPoly> images;
  switch (b.curve) {
    case CurveKind::Point: {
      if (nv != 0) throw Error(ErrorCode::Structural, "point boundaries need nvars = 0");
      vars["x1"] = b.at ? evaluateScalar(*b.at, env) : s;
      images = {b.side == "right" ? -xin : xin};
      break;
    }
    case CurveKind::Graph: {
      if (nv != 1) throw Error(ErrorCode::Structural, "graph boundaries need nvars = 1");
      env.scalars["s"] = s;
      Scalar chi = evaluateScalar(*b.chi, env);
      Scalar dchi = evaluateScalar(*b.dchi, env);
      vars["x1"] = chi;
      vars["x2"] = s;
      vars["chi"] = chi;
      vars["dchi"] = dchi;
      SymbolPoly z = SymbolPoly::zeta(nv, 0);
      if (b.side == "west")
        images = {xin, z - cst(dchi) * xin};
      else
        images = {-xin, z + cst(dchi) * xin};
      break;
    }
    case CurveKind::Circle: {
      if (nv != 1) throw Error(ErrorCode::Structural, "circle boundaries need nvars = 1");
      Scalar rho = b.radius ? evaluateScalar(*b.radius, env) : Scalar::exact(1);
      Scalar c = cosScalar(s), sn = sinScalar(s);
      vars["x1"] = rho * c;
      vars["x2"] = rho * sn;
      vars["t1"] = -sn;
      vars["t2"] = c;
      vars["n1"] = -c;
      vars["n2"] = -sn;
      SymbolPoly z = SymbolPoly::zeta(nv, 0);
      images = {cst(-sn) * z + cst(-c) * xin, cst(c) * z + cst(-sn) * xin};
      break;
    }
    case CurveKind::Flat: {
      for (int k = 0; k < nv; ++k) images.push_back(SymbolPoly::zeta(nv, k));
      images.push_back(xin);
      break;
    }
  }
  if (!b.chart.empty()) {
    Environment chartEnv = env;
    for (const auto& [k, v] : vars) chartEnv.scalars[k] = v;
    chartEnv.symbols["xin"] = xin;
    for (int k = 0; k < nv; ++k) chartEnv.symbols["zeta" + std::to_string(k + 1)] = SymbolPoly::zeta(nv, k);
    for (const auto& [key, e] : b.chart) {
      int idx = std::stoi(key.substr(2)) - 1;
      if (idx < 0 || idx > nv) throw ParseError(ErrorCode::Parse, e->span, "chart variable '" + key + "' out of range");
      images[idx] = evaluateSymbol(*e, chartEnv);
    }
  }
  SymbolPoly a = elaborateWithImages(spec, images, vars);
  if (a.isZero()) throw Error(ErrorCode::Structural, "operator symbol is identically zero");
  if (a.xinDegree() != spec.order)
    throw Error(ErrorCode::Structural, "declared order " + std::to_string(spec.order) + " but the symbol has degree " +
                                           std::to_string(a.xinDegree()) + " in xin on '" + component + "'");
  return a;
}

std::vector<std::vector<Rational>> zetaSamples(const OperatorSpec& spec) {
  if (spec.zetaSamples.empty()) return defaultZetaSamples(spec.nvars);
  Environment env = paramEnvironment(spec);
  std::vector<std::vector<Rational>> out;
  for (const auto& e : spec.zetaSamples) {
    std::vector<Rational> z;
    if (e->kind == Expr::Kind::Tuple) {
      for (const auto& c : e->args) z.push_back(evaluateScalar(*c, env).toRational());
    } else {
      z.push_back(evaluateScalar(*e, env).toRational());
    }
    if (static_cast<int>(z.size()) != spec.nvars)
      throw ParseError(ErrorCode::Parse, e->span, "zeta sample needs " + std::to_string(spec.nvars) + " components");
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace blexpand::dsl
