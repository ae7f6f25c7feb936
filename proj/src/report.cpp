#include "blexpand/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "blexpand/error.hpp"

namespace blexpand {

using json = nlohmann::ordered_json;

namespace {

ComplexPair pair(Complex z) { return {z.real(), z.imag()}; }

CheckDoc checkDoc(const Check& c) { return {statusName(c.status), c.evidence}; }

OperatorDoc operatorDoc(const LayerOperator& op, const std::vector<Rational>& zeta, bool withBasis) {
  OperatorDoc d;
  d.classIndex = op.classIndex + 1;
  d.gamma = toString(op.gamma);
  d.symbol = op.symbol.str();
  d.zetaDependent = !op.orderZero;
  d.mPlus = op.mPlus;
  d.isLayer = isBoundaryLayerExponent(op);
  if (!withBasis) return d;
  try {
    ProfileBasis b = profileBasis(op, zeta);
    BasisDoc bd;
    for (const auto& r : b.roots) {
      bd.roots.push_back(pair(r.root));
      bd.multiplicities.push_back(r.multiplicity);
    }
    bd.dimension = b.dimension;
    bd.crossCheckError = b.crossCheckError;
    d.basis = bd;
  } catch (const Error& e) {
    d.basisError = e.what();
  }
  return d;
}

// json <-> docs

json toJ(const ComplexPair& z) { return json::array({z[0], z[1]}); }
ComplexPair complexFrom(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json toJ(const std::vector<ComplexPair>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(toJ(z));
  return a;
}
std::vector<ComplexPair> complexesFrom(const json& j) {
  std::vector<ComplexPair> out;
  for (const auto& z : j) out.push_back(complexFrom(z));
  return out;
}

template <typename T, typename F>
json arrayOf(const std::vector<T>& v, F fn) {
  json a = json::array();
  for (const auto& x : v) a.push_back(fn(x));
  return a;
}

template <typename T, typename F>
std::vector<T> vectorOf(const json& j, F fn) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(fn(x));
  return out;
}

json toJ(const CheckDoc& c) { return {{"status", c.status}, {"evidence", c.evidence}}; }
CheckDoc checkFrom(const json& j) { return {j.at("status").get<std::string>(), j.at("evidence").get<std::string>()}; }

json toJ(const OperatorDoc& o) {
  json j{{"class", o.classIndex}, {"gamma", o.gamma},       {"symbol", o.symbol},
         {"zeta_dependent", o.zetaDependent}, {"m_plus", o.mPlus}, {"is_layer", o.isLayer}};
  if (o.basis)
    j["basis"] = {{"roots", toJ(o.basis->roots)},
                  {"multiplicities", o.basis->multiplicities},
                  {"dimension", o.basis->dimension},
                  {"cross_check_error", o.basis->crossCheckError}};
  if (!o.basisError.empty()) j["basis_error"] = o.basisError;
  return j;
}
OperatorDoc operatorFrom(const json& j) {
  OperatorDoc o;
  o.classIndex = j.at("class");
  o.gamma = j.at("gamma");
  o.symbol = j.at("symbol");
  o.zetaDependent = j.at("zeta_dependent");
  o.mPlus = j.at("m_plus");
  o.isLayer = j.at("is_layer");
  if (j.contains("basis")) {
    const json& b = j["basis"];
    o.basis = BasisDoc{complexesFrom(b.at("roots")), b.at("multiplicities").get<std::vector<int>>(),
                       b.at("dimension"), b.at("cross_check_error")};
  }
  if (j.contains("basis_error")) o.basisError = j["basis_error"];
  return o;
}

json toJ(const ComponentDoc& c) {
  json j{{"id", c.id}};
  j["samples"] = arrayOf(c.samples, [](const SampleDoc& s) {
    json sj{{"parameter", s.parameter}, {"value", s.value},           {"pattern", s.pattern},
            {"degree", s.degree},       {"regular", s.regularCount}};
    sj["classes"] = arrayOf(s.classes, [](const ClassDoc& c) {
      return json{{"gamma", c.gamma}, {"multiplicity", c.multiplicity}, {"beta", c.beta}};
    });
    sj["operators"] = arrayOf(s.operators, [](const OperatorDoc& o) { return toJ(o); });
    if (!s.operatorError.empty()) sj["operator_error"] = s.operatorError;
    return sj;
  });
  j["hypotheses"] = {{"H1", toJ(c.h1)}, {"H2", toJ(c.h2)}, {"H3", toJ(c.h3)}, {"H4", toJ(c.h4)}};
  j["turning_points"] = arrayOf(c.turningPoints, [](const TurningPointDoc& t) {
    return json{{"parameter", t.parameter}, {"bracket", t.bracket}, {"before", t.before}, {"after", t.after}};
  });
  j["exponents"] = arrayOf(c.exponents, [](const ExponentDoc& e) {
    return json{{"class", e.classIndex}, {"gamma", e.gamma},   {"m_plus", e.mPlus},
                {"is_layer", e.isLayer},  {"symbol", e.symbol}};
  });
  return j;
}
ComponentDoc componentFrom(const json& j) {
  ComponentDoc c;
  c.id = j.at("id");
  c.samples = vectorOf<SampleDoc>(j.at("samples"), [](const json& sj) {
    SampleDoc s;
    s.parameter = sj.at("parameter");
    s.value = sj.at("value");
    s.pattern = sj.at("pattern");
    s.degree = sj.at("degree");
    s.regularCount = sj.at("regular");
    s.classes = vectorOf<ClassDoc>(sj.at("classes"), [](const json& c) {
      return ClassDoc{c.at("gamma"), c.at("multiplicity"), c.at("beta")};
    });
    s.operators = vectorOf<OperatorDoc>(sj.at("operators"), operatorFrom);
    if (sj.contains("operator_error")) s.operatorError = sj["operator_error"];
    return s;
  });
  const json& h = j.at("hypotheses");
  c.h1 = checkFrom(h.at("H1"));
  c.h2 = checkFrom(h.at("H2"));
  c.h3 = checkFrom(h.at("H3"));
  c.h4 = checkFrom(h.at("H4"));
  c.turningPoints = vectorOf<TurningPointDoc>(j.at("turning_points"), [](const json& t) {
    return TurningPointDoc{t.at("parameter"), t.at("bracket"), t.at("before"), t.at("after")};
  });
  c.exponents = vectorOf<ExponentDoc>(j.at("exponents"), [](const json& e) {
    return ExponentDoc{e.at("class"), e.at("gamma"), e.at("m_plus"), e.at("is_layer"), e.at("symbol")};
  });
  return c;
}

json toJ(const ClaimDoc& c) {
  json j{{"component", c.component}, {"class", c.classIndex}, {"claimed_layer", c.claimed}};
  j["computed_layer"] = c.computed ? json(*c.computed) : json(nullptr);
  j["agrees"] = c.agrees;
  j["evidence"] = c.evidence;
  return j;
}
ClaimDoc claimFrom(const json& j) {
  ClaimDoc c;
  c.component = j.at("component");
  c.classIndex = j.at("class");
  c.claimed = j.at("claimed_layer");
  if (!j.at("computed_layer").is_null()) c.computed = j["computed_layer"].get<bool>();
  c.agrees = j.at("agrees");
  c.evidence = j.at("evidence");
  return c;
}

json toJ(const ExpansionDoc& e) {
  json j{{"mode", e.mode},         {"order", e.order},          {"rho_denominator", e.rhoDenominator},
         {"cutoff_T", e.cutoffT}, {"bookkeeping", e.bookkeeping}};
  j["interior"] = arrayOf(e.interior, [](const std::vector<ComplexPair>& u) { return toJ(u); });
  j["layers"] = arrayOf(e.layers, [](const LayerTermDoc& l) {
    json lj{{"component", l.component}, {"gamma", l.gamma}, {"class", l.classIndex}, {"m_plus", l.mPlus}};
    lj["orders"] = arrayOf(l.orders, [](const std::vector<ExpTermDoc>& terms) {
      return arrayOf(terms, [](const ExpTermDoc& t) { return json{{"root", toJ(t.root)}, {"poly", toJ(t.poly)}}; });
    });
    return lj;
  });
  return j;
}
ExpansionDoc expansionFrom(const json& j) {
  ExpansionDoc e;
  e.mode = j.at("mode");
  e.order = j.at("order");
  e.rhoDenominator = j.at("rho_denominator");
  e.cutoffT = j.at("cutoff_T");
  e.bookkeeping = j.at("bookkeeping");
  e.interior = vectorOf<std::vector<ComplexPair>>(j.at("interior"), complexesFrom);
  e.layers = vectorOf<LayerTermDoc>(j.at("layers"), [](const json& lj) {
    LayerTermDoc l;
    l.component = lj.at("component");
    l.gamma = lj.at("gamma");
    l.classIndex = lj.at("class");
    l.mPlus = lj.at("m_plus");
    l.orders = vectorOf<std::vector<ExpTermDoc>>(lj.at("orders"), [](const json& terms) {
      return vectorOf<ExpTermDoc>(
          terms, [](const json& t) { return ExpTermDoc{complexFrom(t.at("root")), complexesFrom(t.at("poly"))}; });
    });
    return l;
  });
  return e;
}

json toJ(const ValidationDoc& v) {
  json j{{"problem", v.problem}, {"order", v.order}, {"predicted_order", v.predictedOrder}};
  j["fitted_order"] = v.fittedOrder ? json(*v.fittedOrder) : json("exact");
  j["rows"] = arrayOf(v.rows, [](const ValidationRowDoc& r) {
    return json{{"eps", r.eps},
                {"sup_error", r.supError},
                {"interior_residual", r.interiorResidual},
                {"bc_residual", r.bcResidual},
                {"condition", r.condition}};
  });
  return j;
}
ValidationDoc validationFrom(const json& j) {
  ValidationDoc v;
  v.problem = j.at("problem");
  v.order = j.at("order");
  v.predictedOrder = j.at("predicted_order");
  if (j.at("fitted_order").is_number()) v.fittedOrder = j["fitted_order"].get<double>();
  v.rows = vectorOf<ValidationRowDoc>(j.at("rows"), [](const json& r) {
    return ValidationRowDoc{r.at("eps"), r.at("sup_error"), r.at("interior_residual"), r.at("bc_residual"),
                            r.at("condition")};
  });
  return v;
}

}  // namespace

Report hypothesisReport(const HypothesisReport& rep, bool withBases) {
  Report out;
  out.spec = rep.spec;
  out.title = rep.title;
  for (const auto& c : rep.components) {
    ComponentDoc cd;
    cd.id = c.component;
    for (const auto& s : c.samples) {
      SampleDoc sd;
      sd.parameter = s.parameter;
      sd.value = s.value;
      sd.pattern = s.pattern;
      sd.operatorError = s.operatorError;
      std::vector<Rational> zeta;
      if (s.profile) {
        sd.degree = s.profile->degree;
        sd.regularCount = s.profile->regularCount;
        for (const auto& c : s.profile->classes)
          sd.classes.push_back({toString(c.gamma), c.multiplicity, toString(c.beta)});
        if (!s.profile->samples.empty()) zeta = s.profile->samples.front();
      }
      for (const auto& op : s.operators) sd.operators.push_back(operatorDoc(op, zeta, withBases));
      cd.samples.push_back(std::move(sd));
    }
    cd.h1 = checkDoc(c.h1);
    cd.h2 = checkDoc(c.h2);
    cd.h3 = checkDoc(c.h3);
    cd.h4 = checkDoc(c.h4);
    for (const auto& t : c.turningPoints) cd.turningPoints.push_back({t.parameter, t.bracket, t.before, t.after});
    for (const auto& e : c.exponents)
      cd.exponents.push_back({e.classIndex, toString(e.gamma), e.mPlus, e.isLayer, e.symbol});
    out.components.push_back(std::move(cd));
  }
  out.h5 = checkDoc(rep.h5);
  for (const auto& c : rep.claims)
    out.claims.push_back({c.claim.component, c.claim.classIndex, c.claim.isLayer, c.computed, c.agrees, c.evidence});
  out.notes = rep.notes;
  out.exitCode = rep.anyFailure() ? 1 : 0;
  return out;
}

ExpansionDoc expansionDoc(const ModeProblem& mode, const CompositeExpansion& comp) {
  ExpansionDoc d;
  std::ostringstream label;
  label << mode.kind;
  if (mode.kind != "exp" || sgn(mode.wavenumber) != 0) label << " k=" << toString(mode.wavenumber);
  if (mode.amplitude != Complex(1)) label << " A=" << mode.amplitude.real();
  d.mode = label.str();
  d.order = comp.order;
  d.rhoDenominator = comp.rhoDenominator;
  d.cutoffT = comp.cutoffT;
  d.bookkeeping = comp.bookkeeping.str();
  for (const auto& u : comp.interior) {
    std::vector<ComplexPair> coeffs;
    for (const auto& c : u) coeffs.push_back(pair(c));
    d.interior.push_back(std::move(coeffs));
  }
  for (const auto& l : comp.layers) {
    LayerTermDoc ld{l.component, toString(l.gamma), l.classIndex, l.mPlus, {}};
    for (const auto& v : l.orders) {
      std::vector<ExpTermDoc> terms;
      for (const auto& t : v) {
        ExpTermDoc td{pair(t.root), {}};
        for (const auto& c : t.poly) td.poly.push_back(pair(c));
        terms.push_back(std::move(td));
      }
      ld.orders.push_back(std::move(terms));
    }
    d.layers.push_back(std::move(ld));
  }
  return d;
}

ValidationDoc validationDoc(const ValidationResult& v) {
  ValidationDoc d;
  d.problem = v.problem;
  d.order = v.order;
  d.predictedOrder = v.predictedOrder;
  if (!v.exact) d.fittedOrder = v.fittedOrder;
  for (const auto& r : v.rows) d.rows.push_back({r.eps, r.supError, r.interiorResidual, r.bcResidual, r.condition});
  return d;
}

std::string emitJson(const Report& r) {
  json j{{"schema", r.schema}, {"command", r.command}, {"spec", r.spec}, {"title", r.title}};
  j["components"] = arrayOf(r.components, [](const ComponentDoc& c) { return toJ(c); });
  j["H5"] = toJ(r.h5);
  j["claims"] = arrayOf(r.claims, [](const ClaimDoc& c) { return toJ(c); });
  j["notes"] = r.notes;
  j["expansions"] = arrayOf(r.expansions, [](const ExpansionDoc& e) { return toJ(e); });
  j["validation"] = r.validation ? toJ(*r.validation) : json(nullptr);
  j["exit_code"] = r.exitCode;
  return j.dump(2) + "\n";
}

Report parseJson(const std::string& text) {
  try {
    json j = json::parse(text);
    Report r;
    r.schema = j.at("schema");
    if (r.schema != 1) throw Error(ErrorCode::InvalidArgument, "unsupported report schema " + std::to_string(r.schema));
    r.command = j.at("command");
    r.spec = j.at("spec");
    r.title = j.at("title");
    r.components = vectorOf<ComponentDoc>(j.at("components"), componentFrom);
    r.h5 = checkFrom(j.at("H5"));
    r.claims = vectorOf<ClaimDoc>(j.at("claims"), claimFrom);
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.expansions = vectorOf<ExpansionDoc>(j.at("expansions"), expansionFrom);
    if (!j.at("validation").is_null()) r.validation = validationFrom(j["validation"]);
    r.exitCode = j.at("exit_code");
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string emitCsv(const ValidationDoc& v) {
  std::ostringstream os;
  os << "eps,sup_error,interior_residual,bc_residual\n" << std::setprecision(17);
  for (const auto& r : v.rows) os << r.eps << "," << r.supError << "," << r.interiorResidual << "," << r.bcResidual << "\n";
  return os.str();
}

std::string renderText(const Report& r) {
  std::ostringstream os;
  os << r.spec;
  if (!r.title.empty()) os << ": " << r.title;
  os << "\n";
  for (const auto& c : r.components) {
    os << "component " << c.id << " (" << c.samples.size() << " samples)\n";
    os << "  H1 " << c.h1.status << "  H2 " << c.h2.status << "  H3 " << c.h3.status << "  H4 " << c.h4.status
       << "\n";
    for (const auto* h : {&c.h1, &c.h2, &c.h3, &c.h4})
      if (h->status == "fail") os << "    " << h->evidence << "\n";
    if (!c.samples.empty() && c.h3.status == "pass") os << "  pattern " << c.samples.front().pattern << "\n";
    for (const auto& e : c.exponents)
      os << "  class " << e.classIndex << ": gamma=" << e.gamma << " m+=" << e.mPlus
         << (e.isLayer ? " boundary layer, width eps^" + e.gamma : " no decaying profile") << "\n";
    for (const auto& t : c.turningPoints)
      os << "  turning point at " << std::setprecision(10) << t.parameter << " (bracket " << std::setprecision(3)
         << t.bracket << "): " << t.before << " -> " << t.after << "\n";
    if (!c.samples.empty() && !c.samples.front().operators.empty() && c.samples.front().operators.front().basis) {
      for (const auto& o : c.samples.front().operators) {
        if (!o.basis) continue;
        os << "  basis class " << o.classIndex << ": dim " << o.basis->dimension << ", roots";
        for (const auto& z : o.basis->roots) os << " " << std::setprecision(6) << z[0] << (z[1] < 0 ? "" : "+") << z[1] << "i";
        os << ", quadrature check " << std::setprecision(2) << o.basis->crossCheckError << "\n";
      }
    }
  }
  os << "H5 " << r.h5.status;
  if (!r.h5.evidence.empty()) os << ": " << r.h5.evidence;
  os << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  for (const auto& e : r.expansions) {
    os << "expansion [" << e.mode << "] order " << e.order << ", rho = eps^(1/" << e.rhoDenominator << "), "
       << e.bookkeeping << "\n";
    for (const auto& l : e.layers) os << "  layer at " << l.component << ": gamma=" << l.gamma << " m+=" << l.mPlus << "\n";
  }
  if (r.validation) {
    const auto& v = *r.validation;
    os << "validation " << v.problem << " order " << v.order << "\n";
    os << "  eps          sup_error    interior_res bc_res       cond\n";
    for (const auto& row : v.rows) {
      os << std::scientific << std::setprecision(4) << "  " << row.eps << "  " << row.supError << "  "
         << row.interiorResidual << "  " << row.bcResidual << "  " << row.condition << "\n";
    }
    os << std::defaultfloat << std::setprecision(6) << "  fitted order ";
    if (v.fittedOrder)
      os << *v.fittedOrder;
    else
      os << "exact";
    os << ", predicted " << v.predictedOrder << "\n";
  }
  return os.str();
}

}  // namespace blexpand
