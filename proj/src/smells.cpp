#include <algorithm>
#include <cmath>

#include "hybridlint/detection.hpp"
#include "hybridlint/frontend.hpp"

namespace hybridlint {

RuleWeights FusionWeights::for_rule(Rule rule) const {
  auto it = overrides.find(rule);
  return it != overrides.end() ? it->second : RuleWeights{wStruct, wSem};
}

void FusionWeights::validate() const {
  auto check = [](double s, double l, std::string_view what) {
    if (s < 0 || s > 1 || l < 0 || l > 1 || std::abs(s + l - 1.0) > 1e-9)
      throw Error(std::string(what) + ": wStruct and wSem must lie in [0,1] and sum to 1");
  };
  check(wStruct, wSem, "weights");
  for (const auto& [rule, w] : overrides) check(w.wStruct, w.wSem, to_string(rule));
  if (!(tau > 0 && tau < 1)) throw Error("weights: tau must lie in (0,1)");
}

const FunctionViews* UnitViews::function(NodeId fn) const {
  for (const auto& f : functions)
    if (f.fn == fn) return &f;
  return nullptr;
}

UnitViews build_views(const SourceUnit& unit) {
  UnitViews v;
  v.unit = &unit;
  v.tokens = tokenize(unit);
  v.ast = parse(unit);
  v.codeLines = code_lines(v.tokens);
  for (NodeId fn : v.ast.functions()) {
    FunctionViews f;
    f.fn = fn;
    f.cfg = build_cfg(v.ast, fn);
    f.defuse = reaching_definitions(v.ast, f.cfg);
    f.pdg = build_pdg(v.ast, f.cfg, f.defuse);
    v.functions.push_back(std::move(f));
  }
  return v;
}

EntityRef entity_ref(const Ast& ast, NodeId entity) {
  const Node& n = ast[entity];
  switch (n.kind) {
    case NodeKind::FunctionDef: return {"function", ast.qualified_name(entity), n.span};
    case NodeKind::ClassDef: return {"class", ast.qualified_name(entity), n.span};
    default: return {"module", "<module>", n.span};
  }
}

namespace {

Finding candidate(const UnitViews& v, Rule rule, NodeId entity, double score) {
  Finding f;
  f.rule = rule;
  f.cwe = fixed_cwe(rule);
  f.path = v.unit->path();
  f.entity = entity_ref(v.ast, entity);
  f.span = f.entity.span;
  f.structuralScore = std::clamp(score, 0.0, 1.0);
  f.id = finding_id(rule, f.path, f.span);
  return f;
}

}  // namespace

std::optional<Finding> detect_long_method(const UnitViews& v, NodeId fn, const MetricVector& m, const Thresholds& t) {
  if (!(m.nos > t.longMethodNos || m.cc > t.longMethodCc)) return std::nullopt;
  double score = std::min(1.0, std::max(static_cast<double>(m.nos) / (2.0 * t.longMethodNos),
                                        static_cast<double>(m.cc) / (2.0 * t.longMethodCc)));
  Finding f = candidate(v, Rule::LongMethod, fn, score);
  f.evidence.metrics = {{"nos", static_cast<double>(m.nos), static_cast<double>(t.longMethodNos)},
                        {"cc", static_cast<double>(m.cc), static_cast<double>(t.longMethodCc)}};
  return f;
}

std::optional<Finding> detect_god_class(const UnitViews& v, NodeId cls, const MetricVector& m, const Thresholds& t) {
  bool fires = m.nom > t.godClassNom || m.wmc > t.godClassWmc || (m.loc > t.godClassLoc && m.cbo > t.godClassCbo);
  if (!fires) return std::nullopt;
  double score = std::max({static_cast<double>(m.nom) / (2.0 * t.godClassNom),
                           static_cast<double>(m.wmc) / (2.0 * t.godClassWmc),
                           static_cast<double>(m.cbo) / (2.0 * t.godClassCbo)});
  Finding f = candidate(v, Rule::GodClass, cls, std::min(1.0, score));
  f.evidence.metrics = {{"nom", static_cast<double>(m.nom), static_cast<double>(t.godClassNom)},
                        {"wmc", static_cast<double>(m.wmc), static_cast<double>(t.godClassWmc)},
                        {"loc", static_cast<double>(m.loc), static_cast<double>(t.godClassLoc)},
                        {"cbo", static_cast<double>(m.cbo), static_cast<double>(t.godClassCbo)}};
  return f;
}

std::optional<Finding> detect_data_class(const UnitViews& v, NodeId cls, const MetricVector& m, const Thresholds& t) {
  if (m.nom == 0 || !m.accessorRatio) return std::nullopt;
  double ratio = *m.accessorRatio;
  if (!(ratio >= t.dataClassAccessorRatio && m.fieldCount >= t.dataClassFields && m.wmc <= m.nom + 2))
    return std::nullopt;
  Finding f = candidate(v, Rule::DataClass, cls, ratio);
  f.evidence.metrics = {{"accessorRatio", ratio, t.dataClassAccessorRatio},
                        {"fieldCount", static_cast<double>(m.fieldCount), static_cast<double>(t.dataClassFields)}};
  return f;
}

std::optional<Finding> detect_feature_envy(const UnitViews& v, NodeId fn, const Thresholds& t) {
  if (!v.ast.enclosing_class(fn)) return std::nullopt;
  AccessProfile prof = access_profile(v.ast, fn);
  std::string envied;
  int foreign = 0;
  for (const auto& [base, count] : prof.foreign)  // map order breaks ties by name
    if (count > foreign) {
      envied = base;
      foreign = count;
    }
  if (!(foreign >= t.featureEnvyForeign && foreign > prof.own)) return std::nullopt;
  Finding f = candidate(v, Rule::FeatureEnvy, fn, static_cast<double>(foreign) / (foreign + prof.own));
  f.evidence.metrics = {{"foreign:" + envied, static_cast<double>(foreign), static_cast<double>(t.featureEnvyForeign)},
                        // own accesses must stay below the foreign count, which serves as its bound
                        {"own", static_cast<double>(prof.own), static_cast<double>(foreign)}};
  return f;
}

}  // namespace hybridlint
