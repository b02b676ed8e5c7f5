#include "hybridlint/finding.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

namespace hybridlint {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 9> kRuleNames{{
    {Rule::LongMethod, "LongMethod"},
    {Rule::GodClass, "GodClass"},
    {Rule::DataClass, "DataClass"},
    {Rule::FeatureEnvy, "FeatureEnvy"},
    {Rule::DuplicatedCode, "DuplicatedCode"},
    {Rule::SqlInjection, "SqlInjection"},
    {Rule::CommandInjection, "CommandInjection"},
    {Rule::Xss, "Xss"},
    {Rule::HardcodedSecret, "HardcodedSecret"},
}};

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("finding json: missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string("finding json: bad \"") + key + "\"");
  }
}

}  // namespace

std::string_view to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const auto& [r, _] : kRuleNames) out.push_back(r);
    return out;
  }();
  return rules;
}

bool is_vulnerability(Rule rule) {
  return rule == Rule::SqlInjection || rule == Rule::CommandInjection || rule == Rule::Xss ||
         rule == Rule::HardcodedSecret;
}

std::optional<int> fixed_cwe(Rule rule) {
  switch (rule) {
    case Rule::SqlInjection: return 89;
    case Rule::CommandInjection: return 78;
    case Rule::Xss: return 79;
    case Rule::HardcodedSecret: return 798;
    default: return std::nullopt;
  }
}

std::string finding_id(Rule rule, const std::string& path, const Span& span) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;  // field separator
    h *= 1099511628211ULL;
  };
  mix(to_string(rule));
  mix(path);
  mix(span.str());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool finding_less(const Finding& a, const Finding& b) {
  if (a.path != b.path) return a.path < b.path;
  if (a.span != b.span) return a.span < b.span;
  return a.rule < b.rule;
}

void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(), finding_less);
}

ojson span_to_json(const Span& s) {
  return ojson{{"startLine", s.startLine}, {"startCol", s.startCol}, {"endLine", s.endLine}, {"endCol", s.endCol}};
}

Span span_from_json(const json& j) {
  if (!j.is_object()) throw Error("finding json: span must be an object");
  Span s;
  s.startLine = field<int>(j, "startLine");
  s.startCol = j.value("startCol", 1);
  s.endLine = field<int>(j, "endLine");
  s.endCol = j.value("endCol", 1);
  return s;
}

ojson to_json(const Finding& f) {
  ojson j;
  j["id"] = f.id;
  j["rule"] = std::string(to_string(f.rule));
  j["cwe"] = f.cwe ? ojson(*f.cwe) : ojson(nullptr);
  j["path"] = f.path;
  j["span"] = span_to_json(f.span);
  j["entity"] = ojson{{"kind", f.entity.kind}, {"name", f.entity.name}, {"span", span_to_json(f.entity.span)}};
  j["structuralScore"] = f.structuralScore;
  j["semanticScore"] = f.semanticScore;
  j["confidence"] = f.confidence;
  ojson ev = ojson::object();
  if (!f.evidence.metrics.empty()) {
    ojson ms = ojson::array();
    for (const auto& m : f.evidence.metrics)
      ms.push_back(ojson{{"metric", m.metric}, {"value", m.value}, {"threshold", m.threshold}});
    ev["metrics"] = ms;
  }
  if (f.evidence.taint) {
    const auto& t = *f.evidence.taint;
    ojson steps = ojson::array();
    for (const auto& s : t.steps)
      steps.push_back(ojson{{"stmt", s.stmt}, {"span", span_to_json(s.span)}, {"variable", s.variable}});
    ev["taint"] = ojson{{"source", t.source}, {"sink", t.sink}, {"sanitized", t.sanitized}, {"steps", steps}};
  }
  if (f.evidence.clone) {
    ojson partners = ojson::array();
    for (const auto& p : f.evidence.clone->partners)
      partners.push_back(ojson{{"path", p.path}, {"span", span_to_json(p.span)}});
    ev["clone"] = ojson{{"tokens", f.evidence.clone->tokens}, {"partners", partners}};
  }
  if (f.evidence.literal) {
    const auto& l = *f.evidence.literal;
    ev["literal"] = ojson{{"span", span_to_json(l.literal)}, {"target", l.target}, {"trigger", l.trigger},
                          {"entropy", l.entropy}, {"length", l.length}};
  }
  j["evidence"] = ev;
  if (f.inDiff) j["inDiff"] = true;
  return j;
}

Finding finding_from_json(const json& j) {
  if (!j.is_object()) throw Error("finding json: expected an object");
  Finding f;
  f.id = field<std::string>(j, "id");
  auto rule = parse_rule(field<std::string>(j, "rule"));
  if (!rule) throw Error("finding json: unknown rule");
  f.rule = *rule;
  if (j.contains("cwe") && !j["cwe"].is_null()) f.cwe = field<int>(j, "cwe");
  f.path = field<std::string>(j, "path");
  f.span = span_from_json(field<json>(j, "span"));
  json ent = field<json>(j, "entity");
  f.entity.kind = field<std::string>(ent, "kind");
  f.entity.name = field<std::string>(ent, "name");
  f.entity.span = span_from_json(field<json>(ent, "span"));
  f.structuralScore = field<double>(j, "structuralScore");
  f.semanticScore = field<double>(j, "semanticScore");
  f.confidence = field<double>(j, "confidence");
  f.inDiff = j.value("inDiff", false);
  json ev = j.value("evidence", json::object());
  if (ev.contains("metrics"))
    for (const auto& m : ev["metrics"])
      f.evidence.metrics.push_back({field<std::string>(m, "metric"), field<double>(m, "value"), field<double>(m, "threshold")});
  if (ev.contains("taint")) {
    const json& t = ev["taint"];
    TaintEvidence te;
    te.source = field<std::string>(t, "source");
    te.sink = field<std::string>(t, "sink");
    te.sanitized = field<bool>(t, "sanitized");
    for (const auto& s : field<json>(t, "steps"))
      te.steps.push_back({field<NodeId>(s, "stmt"), span_from_json(field<json>(s, "span")), field<std::string>(s, "variable")});
    f.evidence.taint = te;
  }
  if (ev.contains("clone")) {
    CloneEvidence ce;
    ce.tokens = field<int>(ev["clone"], "tokens");
    for (const auto& p : field<json>(ev["clone"], "partners"))
      ce.partners.push_back({field<std::string>(p, "path"), span_from_json(field<json>(p, "span"))});
    f.evidence.clone = ce;
  }
  if (ev.contains("literal")) {
    const json& l = ev["literal"];
    f.evidence.literal = LiteralEvidence{span_from_json(field<json>(l, "span")), field<std::string>(l, "target"),
                                         field<std::string>(l, "trigger"), field<double>(l, "entropy"),
                                         field<int>(l, "length")};
  }
  return f;
}

}  // namespace hybridlint
